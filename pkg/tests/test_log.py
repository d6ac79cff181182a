"""Tests for console/file logging setup."""

import logging

import pytest
from rich.logging import RichHandler

from qjord.settings import log_level


@pytest.fixture
def fresh_logging(monkeypatch):
    from qjord.helpers import log as qlog

    monkeypatch.setattr(qlog, "_ready", False)
    logger = logging.getLogger("qjord")
    before, level = list(logger.handlers), logger.level
    yield qlog
    for handler in logger.handlers[:]:
        if handler not in before:
            handler.close()
            logger.removeHandler(handler)
    logger.setLevel(level)


def _added(before):
    return [h for h in logging.getLogger("qjord").handlers if h not in before]


def test_init_logging_is_idempotent(fresh_logging, tmp_path):
    before = list(logging.getLogger("qjord").handlers)
    fresh_logging.init_logging(logging.INFO, tmp_path / "qjord.log")
    fresh_logging.init_logging(logging.DEBUG, tmp_path / "other.log")
    assert len(_added(before)) == 2
    assert not (tmp_path / "other.log").exists()


def test_file_log_keeps_debug_with_suite_tag(fresh_logging, tmp_path):
    path = tmp_path / "logs" / "qjord.log"
    logger = fresh_logging.init_logging(logging.INFO, path)
    with fresh_logging.suite_scope("uh_sl3"):
        logger.debug("series truncated")
    logger.debug("outside")
    for handler in logger.handlers:
        handler.flush()
    text = path.read_text(encoding="utf-8")
    assert "DEBUG" in text
    assert "[uh_sl3] series truncated" in text
    assert "[-] outside" in text


def test_log_level_from_environment(monkeypatch):
    monkeypatch.setenv("QJORD_LOG_LEVEL", "warning")
    assert log_level() == logging.WARNING
    monkeypatch.setenv("QJORD_LOG_LEVEL", "chatty")
    assert log_level() == logging.INFO
    monkeypatch.delenv("QJORD_LOG_LEVEL")
    assert log_level() == logging.INFO


def test_console_level_follows_environment(fresh_logging, monkeypatch, tmp_path):
    monkeypatch.setenv("QJORD_LOG_LEVEL", "ERROR")
    before = list(logging.getLogger("qjord").handlers)
    fresh_logging.init_logging(log_path=tmp_path / "qjord.log")
    console = [h for h in _added(before) if isinstance(h, RichHandler)]
    assert [h.level for h in console] == [logging.ERROR]
