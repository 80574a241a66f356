"""Periodic-Finite-Type Shift Analysis

Normal forms, presentations, spectral invariants and periods of shifts
described by periodically scheduled forbidden words.
"""

__version__ = "1.0.0"
__author__ = "Shift Analysis Team"

from . import pft_analysis

__all__ = ["pft_analysis"]
