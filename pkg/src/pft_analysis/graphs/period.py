"""Periods of states and graphs.

``per(V)`` is the gcd of the lengths of the cycles through ``V``; inside a
strongly connected component it is the same for every state and equals the
gcd of ``level(u) + 1 - level(v)`` over the component's edges for any BFS
levelling. ``per(G)`` is the gcd of ``per(V)`` over all states on cycles.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Dict, List, Tuple

from ..errors import AperiodicEmptyError
from ..presentation.graph import LabeledGraph
from .components import scc

logger = logging.getLogger(__name__)


@dataclass
class PeriodReport:
    """Per-state and per-graph periods of a labeled graph."""
    per_state: Dict[int, int]
    per_graph: int
    irreducible: bool
    component_periods: List[int] = field(default_factory=list)
    acyclic_states: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.irreducible and len(set(self.per_state.values())) > 1:
            raise ValueError("Irreducible graph with unequal state periods")


def _component_period(graph: LabeledGraph, component: List[int]) -> int:
    members = set(component)
    root = component[0]
    level = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for _, v in graph.out_edges[u]:
            if v in members and v not in level:
                level[v] = level[u] + 1
                queue.append(v)
    period = 0
    for u, v, _ in graph.edges:
        if u in members and v in members:
            period = gcd(period, abs(level[u] + 1 - level[v]))
    return period


def graph_period(graph: LabeledGraph) -> PeriodReport:
    """Compute ``per(V)`` for every state on a cycle and ``per(G)``.

    States in components without an internal edge lie on no cycle; they get
    no period and are listed in ``acyclic_states``.

    Raises:
        AperiodicEmptyError: If the graph has no cycle at all
    """
    components = scc(graph)
    per_state: Dict[int, int] = {}
    component_periods = []
    acyclic = []
    for component in components:
        period = _component_period(graph, component)
        if period == 0:
            acyclic.extend(component)
            continue
        component_periods.append(period)
        for state in component:
            per_state[state] = period

    if not per_state:
        raise AperiodicEmptyError(f"Graph with {graph.num_states} states has no cycles")
    if acyclic:
        logger.warning(f"{len(acyclic)} states lie on no cycle and have no period")

    per_graph = reduce(gcd, component_periods)
    return PeriodReport(
        per_state=per_state,
        per_graph=per_graph,
        irreducible=len(components) == 1 and not acyclic,
        component_periods=component_periods,
        acyclic_states=tuple(sorted(acyclic)),
    )


def period_by_cycle_enumeration(graph: LabeledGraph) -> Dict[int, int]:
    """Per-state period from explicit simple-cycle enumeration (small graphs only).

    Each state gets the gcd of the simple cycles inside its component, which
    is the period of every state of that component.
    """
    import networkx as nx

    simple = nx.DiGraph(graph.to_networkx())
    component_of = {}
    for index, component in enumerate(scc(graph)):
        for state in component:
            component_of[state] = index
    gcds: Dict[int, int] = {}
    for cycle in nx.simple_cycles(simple):
        index = component_of[cycle[0]]
        gcds[index] = gcd(gcds.get(index, 0), len(cycle))
    return {state: gcds[index] for state, index in component_of.items() if index in gcds}


__all__ = ["PeriodReport", "graph_period", "period_by_cycle_enumeration"]
