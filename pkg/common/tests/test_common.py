import logging

import pytest

from common.app_setup import print_and_log, print_error, setup_logging
from common.errors import (
    AlgebraicFailure,
    FixboundError,
    InvalidHomomorphismError,
    ParseError,
    PreconditionError,
    ShapeError,
    ZeroBranchError,
)
from common.settings import load_settings


def test_exit_codes():
    assert ParseError("x").exit_code == 2
    assert AlgebraicFailure("x").exit_code == 1
    for cls in (FixboundError, ShapeError, PreconditionError, ZeroBranchError, InvalidHomomorphismError):
        assert cls("x").exit_code == 3


def test_value_errors_are_catchable_as_value_error():
    with pytest.raises(ValueError):
        raise ZeroBranchError("det(I - L^k) = 0")
    with pytest.raises(ValueError):
        raise ShapeError("not square")


def test_error_can_log_itself(caplog):
    with caplog.at_level(logging.ERROR):
        err = PreconditionError("g must be at least 2", log=True)
    assert err.message == "g must be at least 2"
    assert "g must be at least 2" in caplog.text


def test_settings_defaults_env_and_overrides(monkeypatch):
    monkeypatch.delenv("FIXBOUND_MAX_DIM", raising=False)
    settings = load_settings()
    assert settings.max_dim == 64 and settings.oracle_limit == 5000
    monkeypatch.setenv("FIXBOUND_MAX_DIM", "16")
    assert load_settings().max_dim == 16
    assert load_settings(max_dim=8).max_dim == 8
    assert load_settings(max_dim=None).max_dim == 16


def test_setup_logging_writes_file(tmp_path, capsys):
    logfile = tmp_path / "log.txt"
    logger = setup_logging(logfile=str(logfile))
    print_and_log("sweep done")
    print_error("bad literal")
    captured = capsys.readouterr()
    assert captured.out == "sweep done\n"
    assert "bad literal" in captured.err
    for handler in logger.handlers:
        handler.flush()
    text = logfile.read_text()
    assert "sweep done" in text and "bad literal" in text


def test_setup_logging_falls_back_to_null_handler(tmp_path):
    blocked = tmp_path / "file"
    blocked.write_text("")
    logger = setup_logging(logfile=str(blocked / "log.txt"))
    assert isinstance(logger.handlers[0], logging.NullHandler)
