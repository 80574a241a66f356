"""Logging, timing and output-file helpers shared by the CLI and the suites."""

import logging
import sys
import time
from pathlib import Path
from typing import Optional, Union

PACKAGE_LOGGER = "pft_analysis"
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

logger = logging.getLogger(__name__)


class _StderrHandler(logging.StreamHandler):
    """Writes to whatever ``sys.stderr`` is at emit time."""

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, value):
        pass


def setup_logging(verbose: bool = False) -> logging.Logger:
    """Route the package's log records to stderr.

    Stdout carries only command output, so it stays byte-for-byte
    reproducible whatever the log level. Calling this again replaces the
    handler instead of stacking a second one.

    Args:
        verbose: DEBUG when true, WARNING otherwise

    Returns:
        The package logger
    """
    package = logging.getLogger(PACKAGE_LOGGER)
    for handler in list(package.handlers):
        if isinstance(handler, _StderrHandler):
            package.removeHandler(handler)
    handler = _StderrHandler()
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    package.addHandler(handler)
    package.setLevel(logging.DEBUG if verbose else logging.WARNING)
    return package


def ensure_directory(path: Union[str, Path]) -> Path:
    """Create ``path`` (and parents) if missing."""
    path_obj = Path(path)
    path_obj.mkdir(parents=True, exist_ok=True)
    return path_obj


def write_output(path: Union[str, Path], text: str) -> Path:
    """Write a text artifact (DOT, CSV) next to any missing parent directories."""
    out = Path(path)
    ensure_directory(out.parent)
    out.write_text(text, encoding='utf-8')
    logger.debug(f"Wrote {len(text)} characters to {out}")
    return out


class Timer:
    """Context manager logging how long a search or suite took.

    Example:
        with Timer("suite periods") as t:
            ...
        t.elapsed  # seconds
    """

    def __init__(self, description: str, log: Optional[logging.Logger] = None):
        self.description = description
        self.log = log or logger
        self.start_time = None
        self.elapsed = 0.0

    def __enter__(self):
        self.start_time = time.perf_counter()
        self.log.info(f"Starting: {self.description}")
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.elapsed = time.perf_counter() - self.start_time
        outcome = "Failed" if exc_type else "Completed"
        self.log.info(f"{outcome}: {self.description} ({self.elapsed:.2f}s)")
