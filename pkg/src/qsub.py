# -*- coding: utf-8 -*-
"""
命令行入口：python -m src.qsub <command> ...

退出码：0 成功；1 数学输入不合法（DomainError）或 oracle 检查失败；2 用法 / 配置 / 输入格式错误。
"""
import argparse
import json
import logging
import sys

from pydantic import ValidationError

from .algebra.abelian import parse_group
from .config_loader import SCHEMA_VERSION, load_config, setup_logging
from .errors import ConfigError, DomainError, InvalidDatumError, QsubError
from .lie import rootsys
from .oracle.checks import CHECKS, passed, run_checks
from .pipeline.renderer import dump_json, render_census_text, render_hasse_dot, write_output
from .pipeline.schemas import load_datum, load_family, read_json
from .subgroups.census import census
from .subgroups.datum import dim_AD, dims, hopf_subalgebra_dim, hopf_subalgebras, require_valid
from .subgroups.order import equiv, hasse, leq

log = logging.getLogger("qsub")


class UsageError(Exception):
    pass


def build_parser():
    p = argparse.ArgumentParser(prog="qsub", description="Hopf quotients of O_e(G): subgroup data, census and oracle")
    p.add_argument("--log-level", default=None, help="DEBUG / INFO / WARNING / ERROR (default: QSUB_LOG_LEVEL or INFO)")
    p.add_argument("--caps", default=None, help="YAML mapping overriding caps, e.g. '{max_gamma_order: 8}'")
    p.add_argument("--output", default=None, help="write to this file instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("roots", help="positive roots, dimensions and convex order")
    sp.add_argument("--type", required=True, dest="letter")
    sp.add_argument("--rank", required=True, type=int)

    sp = sub.add_parser("datum-dim", help="dimensions attached to a datum")
    sp.add_argument("--file", required=True)

    sp = sub.add_parser("leq", help="decide D <= D' and print a witness")
    sp.add_argument("--left", required=True)
    sp.add_argument("--right", required=True)

    sp = sub.add_parser("poset", help="Hasse diagram of a family of data")
    sp.add_argument("--family", required=True)
    sp.add_argument("--out", choices=("dot", "json"), default="json")

    sp = sub.add_parser("census", help="enumerate data modulo equivalence")
    sp.add_argument("--type", required=True, dest="letter")
    sp.add_argument("--rank", required=True, type=int)
    sp.add_argument("--ell", required=True, type=int)
    sp.add_argument("--gammas", default="1", help="comma separated, e.g. '1,Z2,Z3,Z2xZ2'")
    sp.add_argument("--out", choices=("json", "text"), default=None)

    sp = sub.add_parser("oracle", help="brute-force checks in u_e(sl2)")
    sp.add_argument("--ell", required=True, type=int)
    sp.add_argument("--check", choices=("all",) + CHECKS, default="all")
    sp.add_argument("--samples", type=int, default=None)
    sp.add_argument("--seed", type=int, default=None)

    sp = sub.add_parser("subalgebras", help="triples (Sigma, I+, I-) and their dimensions")
    sp.add_argument("--type", required=True, dest="letter")
    sp.add_argument("--rank", required=True, type=int)
    sp.add_argument("--ell", required=True, type=int)
    return p


def _read(path):
    try:
        return read_json(path)
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror or e}") from e
    except json.JSONDecodeError as e:
        raise UsageError(f"{path} is not JSON: {e}") from e


def _parse_gammas(text):
    try:
        return [parse_group(t) for t in text.split(",") if t.strip()]
    except DomainError as e:
        raise UsageError(f"--gammas: {e}") from e


# ---- 子命令 ----
def cmd_roots(args, cfg):
    return rootsys.to_json(rootsys.build(cfg.letter, cfg.rank)) | {"v": SCHEMA_VERSION}


def cmd_datum_dim(args, cfg):
    D = require_valid(load_datum(_read(args.file)))
    return {"v": SCHEMA_VERSION, **dims(D)}


def cmd_leq(args, cfg):
    D, Dp = load_datum(_read(args.left)), load_datum(_read(args.right))
    cap = cfg.caps.enumeration_cap
    w = leq(D, Dp, cap)
    return {
        "v": SCHEMA_VERSION,
        "leq": w is not None,
        "witness": w.to_json() if w else None,
        "equiv": w is not None and equiv(D, Dp, cap),
    }


def cmd_poset(args, cfg):
    family = load_family(_read(args.family))
    if not family:
        raise UsageError("--family: the family is empty")
    diagram = hasse(family, cfg.caps.enumeration_cap)
    if args.out == "dot":
        return render_hasse_dot(diagram, [dim_AD(family[c["rep"]]) for c in diagram.classes])
    return diagram.to_json()


def cmd_census(args, cfg):
    report = census(rootsys.build(cfg.letter, cfg.rank), cfg.ell, _parse_gammas(args.gammas), cfg.caps)
    if (args.out or cfg.output_format) == "text":
        return render_census_text(report)
    return report


def cmd_oracle(args, cfg):
    report = run_checks(cfg.ell, args.check, args.samples, args.seed)
    ok = passed(report)
    return {"v": SCHEMA_VERSION, "ell": cfg.ell, "passed": ok, "checks": report}, (0 if ok else 1)


def cmd_subalgebras(args, cfg):
    rs = rootsys.build(cfg.letter, cfg.rank)
    triples = hopf_subalgebras(rs, cfg.ell, cfg.caps.enumeration_cap)
    return {
        "v": SCHEMA_VERSION,
        "params": {"type": rs.letter, "rank": rs.n, "ell": cfg.ell},
        "count": len(triples),
        "triples": [T.to_json() | {"dim": hopf_subalgebra_dim(T, rs, cfg.ell)} for T in triples],
    }


COMMANDS = {
    "roots": cmd_roots,
    "datum-dim": cmd_datum_dim,
    "leq": cmd_leq,
    "poset": cmd_poset,
    "census": cmd_census,
    "oracle": cmd_oracle,
    "subalgebras": cmd_subalgebras,
}


def _config(args):
    overrides = {
        "letter": getattr(args, "letter", None),
        "rank": getattr(args, "rank", None),
        "ell": getattr(args, "ell", None),
        "output_format": getattr(args, "out", None),
        "output_path": args.output,
        "caps_text": args.caps,
    }
    return load_config(**overrides).validate()


def _emit(payload, path):
    text = payload if isinstance(payload, str) else dump_json(payload)
    write_output(text, path)


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    try:
        setup_logging(args.log_level)
        cfg = _config(args)
        result = COMMANDS[args.command](args, cfg)
    except (ConfigError, UsageError) as e:
        log.error("%s", e)
        return 2
    except ValidationError as e:
        log.error("malformed input: %s", e)
        return 2
    except InvalidDatumError as e:
        _emit({"v": SCHEMA_VERSION, "error": str(e), "violations": [v.to_json() for v in e.violations]}, None)
        return 1
    except DomainError as e:
        _emit({"v": SCHEMA_VERSION, "error": str(e), "violations": []}, None)
        return 1
    except QsubError as e:
        log.error("internal consistency check failed: %s", e)
        return 1
    payload, code = result if isinstance(result, tuple) else (result, 0)
    _emit(payload, args.output)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
