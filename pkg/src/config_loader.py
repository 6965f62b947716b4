# -*- coding: utf-8 -*-
"""
集中管理配置、路径、上限（caps）与日志初始化。

优先级：config/qsub.yml < 环境变量 QSUB_CAPS < 命令行 --caps / 显式参数。
"""
import logging
import os
import pathlib
import sys
from dataclasses import dataclass, field, fields, replace
from functools import lru_cache

import yaml
from dotenv import load_dotenv

from .errors import ConfigError
from .lie.rootsys import RANK_RULES

# 项目根目录（src 的上一层）
ROOT = pathlib.Path(__file__).resolve().parents[1]
load_dotenv(ROOT / ".env")


# ---- 环境变量读取 ----
def getenv(name, default=None):
    v = os.environ.get(name)
    return v if (v is not None and v != "") else default


# 路径
CONFIG_DIR = ROOT / "config"
TEMPLATES = ROOT / "src" / "templates"

LOG_LEVEL = getenv("QSUB_LOG_LEVEL", "INFO")
LOG_FORMAT = "[%(levelname)s] %(message)s"

SCHEMA_VERSION = 1
OUTPUT_FORMATS = ("json", "dot", "text")
LETTERS = "ABCDEFG"


def load_qsub_cfg():
    p = CONFIG_DIR / "qsub.yml"
    if not p.exists():
        return {}
    try:
        return yaml.safe_load(p.read_text(encoding="utf-8")) or {}
    except yaml.YAMLError as e:
        raise ConfigError(f"cannot parse {p.name}: {e}") from e


@dataclass(frozen=True)
class Caps:
    enumeration_cap: int = 1_000_000
    subgroup_member_limit: int = 10_000
    max_gamma_order: int = 16
    max_ell: int = 7
    max_rank: int = 3

    @classmethod
    def from_mapping(cls, mapping, base=None):
        base = base or cls()
        if not mapping:
            return base
        if not isinstance(mapping, dict):
            raise ConfigError(f"caps must be a mapping, got {type(mapping).__name__}")
        known = {f.name for f in fields(cls)}
        updates = {}
        for key, value in mapping.items():
            if key not in known:
                raise ConfigError(f"unknown cap '{key}' (known: {', '.join(sorted(known))})")
            if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
                raise ConfigError(f"cap '{key}' must be a positive integer, got {value!r}")
            updates[key] = value
        return replace(base, **updates)


def parse_caps_override(text):
    """Parse a YAML flow mapping such as '{max_gamma_order: 8}'."""
    if text is None or not str(text).strip():
        return {}
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise ConfigError(f"cannot parse caps override {text!r}: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError(f"caps override must be a mapping, got {text!r}")
    return data


def load_caps(override_text=None):
    cfg = load_qsub_cfg()
    caps = Caps.from_mapping(cfg.get("caps") or {})
    caps = Caps.from_mapping(parse_caps_override(getenv("QSUB_CAPS")), caps)
    return Caps.from_mapping(parse_caps_override(override_text), caps)


@lru_cache(maxsize=1)
def default_caps():
    return load_caps()


def oracle_settings():
    cfg = load_qsub_cfg().get("oracle") or {}
    samples = int(cfg.get("random_samples", 10_000))
    seed = int(cfg.get("seed", 0))
    if samples <= 0:
        raise ConfigError("oracle.random_samples must be positive")
    return samples, seed


@dataclass(frozen=True)
class Config:
    letter: str = "A"
    rank: int = 1
    ell: int = 3
    caps: Caps = field(default_factory=Caps)
    output_format: str = "json"
    input_path: pathlib.Path | None = None
    output_path: pathlib.Path | None = None

    def violations(self):
        out = []
        if self.letter not in LETTERS:
            out.append(f"unknown Cartan letter '{self.letter}'")
        if self.ell < 3 or self.ell % 2 == 0:
            out.append(f"ell must be odd and >= 3, got {self.ell}")
        if self.letter == "G" and self.ell % 3 == 0:
            out.append(f"3 divides ell={self.ell} for G2")
        rule = RANK_RULES.get(self.letter, lambda n: n >= 1)
        if not isinstance(self.rank, int) or not rule(self.rank):
            out.append(f"rank {self.rank} is out of range for type {self.letter}")
        if self.output_format not in OUTPUT_FORMATS:
            out.append(f"output format must be one of {OUTPUT_FORMATS}")
        return out

    def validate(self):
        problems = self.violations()
        if problems:
            raise ConfigError("; ".join(problems))
        return self


def load_config(**overrides):
    """File defaults, then environment, then explicit overrides (later wins)."""
    cfg = load_qsub_cfg()
    caps_text = overrides.pop("caps_text", None)
    base = {
        "output_format": (cfg.get("output") or {}).get("format", "json"),
        "caps": load_caps(caps_text),
    }
    base.update({k: v for k, v in overrides.items() if v is not None})
    return Config(**base)


_handler = None


def setup_logging(level=None):
    """One stderr handler on the root logger; repeated calls only rebind the stream and level."""
    global _handler
    level = (level or LOG_LEVEL).upper()
    root = logging.getLogger()
    if _handler is None:
        _handler = logging.StreamHandler(sys.stderr)
        _handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(_handler)
    else:
        # 上一个 stderr 可能已被关闭，不能 flush
        _handler.stream = sys.stderr
    try:
        root.setLevel(level)
    except ValueError as e:
        raise ConfigError(f"unknown log level {level!r}") from e
