"""
Logging for the sop command line and library.

Log records go to stderr so stdout carries only command payloads; a
rotating file is added when SOP_LOG_FILE is set. Third-party loggers used
during experiments are held at WARNING.
"""

import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional

DEFAULT_LOG_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s"

LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

# networkx runs the complement graphs, concurrent.futures the experiment workers
THIRD_PARTY_LOGGERS = ("networkx", "hypothesis", "concurrent.futures")

_MARKER = "_sop_handler"


def _owned(handler: logging.Handler) -> bool:
    return getattr(handler, _MARKER, False)


def setup_logging(
    level: str = "WARNING",
    log_file: Optional[str] = None,
    log_format: str = DEFAULT_LOG_FORMAT,
) -> None:
    """
    Attach the stderr handler and, with `log_file`, a rotating file handler.

    Repeated calls only adjust the level.
    """
    root = logging.getLogger()
    set_level(level)
    if any(_owned(h) for h in root.handlers):
        return

    formatter = logging.Formatter(log_format)
    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        log_path = Path(log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(
            RotatingFileHandler(log_path, maxBytes=5 * 1024 * 1024, backupCount=3, encoding="utf-8")
        )

    for handler in handlers:
        handler.setFormatter(formatter)
        setattr(handler, _MARKER, True)
        root.addHandler(handler)
    if log_file:
        logging.getLogger(__name__).info(f"Logging to file: {Path(log_file).absolute()}")

    for name in THIRD_PARTY_LOGGERS:
        logging.getLogger(name).setLevel(logging.WARNING)


def set_level(level: str) -> None:
    """
    Set the root level by name, case-insensitively.

    Raises:
        ValueError: `level` is not one of LEVELS
    """
    name = level.upper()
    if name not in LEVELS:
        raise ValueError(f"unknown log level {level!r}; expected one of {', '.join(LEVELS)}")
    logging.getLogger().setLevel(name)
