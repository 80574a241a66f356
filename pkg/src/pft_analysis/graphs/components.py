"""Strong connectivity and irreducibility of presentations."""

import logging
from collections import defaultdict
from typing import List, Optional, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from ..presentation.graph import LabeledGraph
from ..presentation.ms import trim_essential

logger = logging.getLogger(__name__)


def _sparse_adjacency(graph: LabeledGraph) -> csr_matrix:
    n = graph.num_states
    if not graph.edges:
        return csr_matrix((n, n), dtype=np.int8)
    sources = [u for u, _, _ in graph.edges]
    targets = [v for _, v, _ in graph.edges]
    return csr_matrix((np.ones(len(sources), dtype=np.int8), (sources, targets)), shape=(n, n))


def scc(graph: LabeledGraph) -> List[List[int]]:
    """Strongly connected components, each sorted, ordered by smallest state.

    Args:
        graph: Any labeled graph

    Returns:
        List of components (lists of state indices)
    """
    if graph.is_empty:
        return []
    _, labels = connected_components(_sparse_adjacency(graph), directed=True, connection='strong')
    groups = defaultdict(list)
    for state, label in enumerate(labels):
        groups[int(label)].append(state)
    return sorted(groups.values(), key=lambda comp: comp[0])


def is_irreducible(graph: LabeledGraph) -> bool:
    """True iff the graph is nonempty and strongly connected."""
    return not graph.is_empty and len(scc(graph)) == 1


def component_has_cycle(graph: LabeledGraph, component: List[int]) -> bool:
    members = set(component)
    return any(u in members and v in members for u, v, _ in graph.edges)


def irreducible_components(graph: LabeledGraph) -> List[LabeledGraph]:
    """Induced subgraphs of the components that carry at least one cycle."""
    return [graph.induced_subgraph(comp) for comp in scc(graph)
            if component_has_cycle(graph, comp)]


def shift_is_irreducible(graph: LabeledGraph) -> Tuple[bool, Optional[LabeledGraph]]:
    """Decide whether the presented shift is irreducible.

    A shift presented by an essential graph is irreducible exactly when one
    of the graph's irreducible components already presents the whole shift.

    Returns:
        ``(irreducible, component)`` with a presenting component when irreducible
    """
    from ..language.equality import shifts_equal

    graph = trim_essential(graph)
    if graph.is_empty:
        return False, None
    if is_irreducible(graph):
        return True, graph
    for component in irreducible_components(graph):
        if shifts_equal(component, graph):
            logger.info(f"Reducible presentation, but a component with "
                        f"{component.num_states} states presents the whole shift")
            return True, component
    return False, None


def _word_state_sets(graph: LabeledGraph, max_len: int, reverse: bool) -> np.ndarray:
    """Boolean rows ``S(u)`` for every nonempty readable word with ``|u| <= max_len``.

    Forward: states where a path labeled ``u`` can end. Reverse: states where
    a path labeled ``u`` can start.
    """
    n, q = graph.num_states, graph.alphabet.size
    step = np.zeros((q, n, n), dtype=bool)
    for u, v, a in graph.edges:
        if reverse:
            step[a, v, u] = True
        else:
            step[a, u, v] = True
    frontier = [np.ones(n, dtype=bool)]
    rows = []
    for _ in range(max_len):
        nxt = []
        for current in frontier:
            for a in range(q):
                image = step[a][current].any(axis=0)
                if image.any():
                    nxt.append(image)
        rows.extend(nxt)
        frontier = nxt
    return np.array(rows, dtype=bool).reshape(len(rows), n)


def language_irreducibility_check(graph: LabeledGraph, max_len: int) -> bool:
    """Check that any two blocks ``u, v`` with ``|u|, |v| <= max_len`` join as ``uzv``.

    ``uzv`` is a block iff some state where ``u`` can end reaches some state
    where ``v`` can start; the graph is trimmed first so every path extends
    to a point of the shift.
    """
    graph = trim_essential(graph)
    if graph.is_empty:
        logger.warning("Language irreducibility holds vacuously on the empty shift")
        return True
    reach = np.isfinite(shortest_path(_sparse_adjacency(graph), directed=True, unweighted=True))
    ends = _word_state_sets(graph, max_len, reverse=False)
    starts = _word_state_sets(graph, max_len, reverse=True)
    reachable_from_ends = (ends.astype(np.int64) @ reach.astype(np.int64)) > 0
    joinable = (reachable_from_ends.astype(np.int64) @ starts.T.astype(np.int64)) > 0
    return bool(joinable.all())


__all__ = [
    "scc",
    "is_irreducible",
    "component_has_cycle",
    "irreducible_components",
    "shift_is_irreducible",
    "language_irreducibility_check",
]
