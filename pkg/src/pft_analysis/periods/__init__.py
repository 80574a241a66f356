"""Periods Package

The three periods of a shift and the checks relating them:
- Sequential period (periodic points, word and cycle searches)
- Graphical period bounds and the gcd necessary condition
- Descriptive period search with properness verdicts
- Divisibility report between descriptive and graphical periods
"""

from .data_structures import (
    ACHIEVABLE, NOT_FOUND, INCONCLUSIVE,
    SeqPeriodResult, GraphPeriodBounds, DescRow, DescVerdict, PeriodTriple, ConjectureReport,
)
from .sequential import member_blocks, t_seq, realized_periods, t_seq_via_cycles
from .graphical import t_graph_bounds, prop1_necessary_check, graph_at_least_seq_check
from .descriptive import (
    sft_row, OccurrenceGraph, CandidateSearch,
    t_desc_search, divisibility_conjecture_check, period_triple,
)

__all__ = [
    # Results
    "ACHIEVABLE",
    "NOT_FOUND",
    "INCONCLUSIVE",
    "SeqPeriodResult",
    "GraphPeriodBounds",
    "DescRow",
    "DescVerdict",
    "PeriodTriple",
    "ConjectureReport",

    # Sequential
    "member_blocks",
    "t_seq",
    "realized_periods",
    "t_seq_via_cycles",

    # Graphical
    "t_graph_bounds",
    "prop1_necessary_check",
    "graph_at_least_seq_check",

    # Descriptive
    "sft_row",
    "OccurrenceGraph",
    "CandidateSearch",
    "t_desc_search",
    "divisibility_conjecture_check",
    "period_triple",
]
