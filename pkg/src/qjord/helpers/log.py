"""Rich console + file logging, with every record tagged by the suite that emitted it."""

import logging
from collections.abc import Iterator
from contextlib import contextmanager
from contextvars import ContextVar
from pathlib import Path

from rich.console import Console
from rich.logging import RichHandler

from qjord.settings import LOG_PATH, log_level

terminal = Console()

_suite: ContextVar[str] = ContextVar("qjord_suite", default="-")
_ready = False


class SuiteTag(logging.Filter):
    """Stamp ``record.suite`` with the suite currently running ("-" outside one)."""

    def filter(self, record: logging.LogRecord) -> bool:
        record.suite = _suite.get()
        return True


@contextmanager
def suite_scope(name: str) -> Iterator[None]:
    token = _suite.set(name)
    try:
        yield
    finally:
        _suite.reset(token)


def init_logging(level: int | None = None, log_path: Path | None = None) -> logging.Logger:
    """Set up the 'qjord' logger (idempotent).

    ``level`` falls back to ``QJORD_LOG_LEVEL`` and then INFO; the file at
    ``log_path`` (default: ``paths.log`` in config.yml) always records DEBUG.
    """
    global _ready

    logger = logging.getLogger("qjord")
    if _ready:
        return logger

    level = log_level() if level is None else level
    logger.setLevel(min(level, logging.DEBUG))
    tag = SuiteTag()

    ch = RichHandler(console=terminal, show_path=False, markup=True)
    ch.setLevel(level)
    ch.addFilter(tag)

    # series truncation and ledger fallbacks only show up here
    path = Path(log_path or LOG_PATH)
    path.parent.mkdir(parents=True, exist_ok=True)
    fh = logging.FileHandler(path, encoding="utf-8")
    fh.setLevel(logging.DEBUG)
    fh.addFilter(tag)
    fh.setFormatter(logging.Formatter("%(asctime)s %(levelname)-8s [%(suite)s] %(message)s"))

    logger.addHandler(ch)
    logger.addHandler(fh)

    _ready = True
    return logger
