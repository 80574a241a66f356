"""Utils package for common utilities.

This package provides logging setup, timing and output-file helpers.
"""

from .common import setup_logging, Timer, ensure_directory, write_output

__all__ = [
    "setup_logging",
    "Timer",
    "ensure_directory",
    "write_output",
]
