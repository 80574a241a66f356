"""Graph Analysis Package

Strongly connected components, irreducibility (graph- and language-level)
and the periods ``per(V)`` and ``per(G)`` of presentations.
"""

from .components import (
    scc,
    is_irreducible,
    component_has_cycle,
    irreducible_components,
    shift_is_irreducible,
    language_irreducibility_check,
)
from .period import PeriodReport, graph_period, period_by_cycle_enumeration

__all__ = [
    # Components
    "scc",
    "is_irreducible",
    "component_has_cycle",
    "irreducible_components",
    "shift_is_irreducible",
    "language_irreducibility_check",

    # Periods
    "PeriodReport",
    "graph_period",
    "period_by_cycle_enumeration",
]
