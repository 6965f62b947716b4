import io
import logging
import sys

import pytest

from src.config_loader import (
    Caps, Config, load_caps, load_config, oracle_settings, parse_caps_override, setup_logging,
)
from src.errors import ConfigError


def test_file_defaults():
    caps = load_caps()
    assert caps.max_gamma_order == 16
    assert caps.max_ell == 7
    assert oracle_settings() == (10000, 20240917)


def test_override_text():
    assert parse_caps_override("{max_ell: 5}") == {"max_ell": 5}
    assert parse_caps_override(None) == {}
    assert load_caps("{max_gamma_order: 8}").max_gamma_order == 8


def test_environment_then_flag(monkeypatch):
    monkeypatch.setenv("QSUB_CAPS", "{max_rank: 2, max_ell: 5}")
    caps = load_caps("{max_ell: 9}")
    assert caps.max_rank == 2
    assert caps.max_ell == 9


@pytest.mark.parametrize("mapping", [{"bogus": 1}, {"max_ell": 0}, {"max_ell": "7"}, {"max_ell": True}])
def test_bad_caps(mapping):
    with pytest.raises(ConfigError):
        Caps.from_mapping(mapping)


@pytest.mark.parametrize("text", ["[1, 2]", "{max_ell: [", "7"])
def test_bad_override_text(text):
    with pytest.raises(ConfigError):
        parse_caps_override(text)


def test_config_validation():
    assert load_config(letter="B", rank=2, ell=5).validate().letter == "B"
    assert Config(ell=4).violations() == ["ell must be odd and >= 3, got 4"]
    assert Config(letter="G", rank=2, ell=9).violations() == ["3 divides ell=9 for G2"]
    assert Config(letter="D", rank=3).violations() == ["rank 3 is out of range for type D"]
    assert Config(letter="F", rank=4).violations() == []
    with pytest.raises(ConfigError):
        Config(letter="X").validate()
    with pytest.raises(ConfigError):
        Config(output_format="yaml").validate()


def test_explicit_none_keeps_defaults():
    cfg = load_config(ell=None, output_format=None)
    assert cfg.ell == 3
    assert cfg.output_format == "json"


def test_logging_level():
    setup_logging("warning")
    assert logging.getLogger().level == logging.WARNING
    with pytest.raises(ConfigError):
        setup_logging("chatty")
    setup_logging("INFO")


def test_logging_rebinds_after_stderr_closed(monkeypatch):
    first = io.StringIO()
    monkeypatch.setattr(sys, "stderr", first)
    setup_logging("INFO")
    first.close()
    second = io.StringIO()
    monkeypatch.setattr(sys, "stderr", second)
    setup_logging("INFO")
    logging.getLogger("qsub").error("after rebind")
    assert "[ERROR] after rebind" in second.getvalue()
