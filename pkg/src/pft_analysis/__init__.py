"""Periodic-Finite-Type Shift Analysis Package

This package contains the core functionality for analyzing shifts described
by periodically scheduled forbidden words:
- Forbidden schedules, normal forms and periodic-point membership
- Phased de Bruijn presentations
- Irreducibility, periods of graphs and shift equality
- Characteristic polynomials and entropy
- Sequential, graphical and descriptive periods
- Shift families and verification suites
"""

__version__ = "1.0.0"
__author__ = "Shift Analysis Team"

from .core import Alphabet, PeriodicWord, PftSpec, normalize_pft, normalize_sft, periodic_membership
from .presentation import LabeledGraph, build_ms, build_subgraph_h
from .graphs import scc, is_irreducible, shift_is_irreducible, graph_period
from .language import shifts_equal, separating_word, subshift_contains, follower_minimize
from .spectral import char_poly, entropy, theorem3_check
from .periods import t_seq, t_seq_via_cycles, t_graph_bounds, t_desc_search, period_triple
from .families import psi_word, psi_power, xk_spec, theorem8_spec

from .config import DEFAULT_CONFIG, PftConfig
from .errors import PftError
from .utils import setup_logging, Timer, ensure_directory

__all__ = [
    # Shift core
    "Alphabet",
    "PeriodicWord",
    "PftSpec",
    "normalize_pft",
    "normalize_sft",
    "periodic_membership",

    # Presentations
    "LabeledGraph",
    "build_ms",
    "build_subgraph_h",

    # Graph analysis
    "scc",
    "is_irreducible",
    "shift_is_irreducible",
    "graph_period",

    # Languages
    "shifts_equal",
    "separating_word",
    "subshift_contains",
    "follower_minimize",

    # Spectral
    "char_poly",
    "entropy",
    "theorem3_check",

    # Periods
    "t_seq",
    "t_seq_via_cycles",
    "t_graph_bounds",
    "t_desc_search",
    "period_triple",

    # Families
    "psi_word",
    "psi_power",
    "xk_spec",
    "theorem8_spec",

    # Configuration
    "DEFAULT_CONFIG",
    "PftConfig",
    "PftError",

    # Utilities
    "setup_logging",
    "Timer",
    "ensure_directory",
]
