"""Phased de Bruijn presentations of periodic-finite-type shifts.

The presentation of a spec in normal form with word length ``ℓ`` and period
``T`` is built in four steps:

1. Take ``T`` copies ``V^(0) .. V^(T-1)`` of ``Σ^ℓ``.
2. Draw an edge labeled ``a`` from ``u`` in ``V^(j)`` to ``v`` in
   ``V^(j+1 mod T)`` whenever ``v = u_2 .. u_ℓ a``.
3. Delete the phase-0 copies of the forbidden words.
4. Repeatedly delete states without incoming or without outgoing edges.

The result is deterministic, and every path of length at least ``ℓ`` ends at
the state whose word is the last ``ℓ`` labels read.
"""

import logging
from collections import deque
from typing import List

from ..core.normalize import normalize_pft
from ..core.spec import PftSpec
from ..core.words import decode_word, encode_word
from .graph import LabeledGraph, StateTag

logger = logging.getLogger(__name__)


def _require_normal_form(spec: PftSpec) -> None:
    if not spec.is_normal_form:
        raise ValueError(f"Spec must be in normal form: {spec}")


def build_phased_full(spec: PftSpec) -> LabeledGraph:
    """All ``T·q^ℓ`` phased states with their shift edges.

    Every state has exactly ``q`` outgoing and ``q`` incoming edges.
    """
    _require_normal_form(spec)
    q, length, T = spec.q, spec.word_length, spec.period
    size = q ** length
    states = tuple(StateTag(j, decode_word(code, length, q))
                   for j in range(T) for code in range(size))
    edges = []
    for j in range(T):
        nxt = ((j + 1) % T) * size
        for code in range(size):
            shifted = (code * q) % size
            for a in range(q):
                edges.append((j * size + code, nxt + shifted + a, a))
    return LabeledGraph(spec.alphabet, states, tuple(edges), length, T)


def remove_forbidden(graph: LabeledGraph, spec: PftSpec) -> LabeledGraph:
    """Delete the phase-0 states named by ``F^(0)`` together with their edges."""
    forbidden = spec.forbidden
    keep = [i for i, tag in enumerate(graph.states)
            if not (tag.phase == 0 and tag.word in forbidden)]
    return graph.induced_subgraph(keep)


def trim_essential(graph: LabeledGraph) -> LabeledGraph:
    """Largest essential subgraph: every state keeps an incoming and an outgoing edge.

    Uses a worklist with in/out degree counters; the surviving state set is
    the same whatever order states are removed in.
    """
    n = graph.num_states
    indeg = [len(row) for row in graph.in_edges]
    outdeg = [len(row) for row in graph.out_edges]
    alive = [True] * n
    queue = deque(i for i in range(n) if indeg[i] == 0 or outdeg[i] == 0)
    while queue:
        s = queue.popleft()
        if not alive[s]:
            continue
        alive[s] = False
        for _, v in graph.out_edges[s]:
            if alive[v]:
                indeg[v] -= 1
                if indeg[v] == 0:
                    queue.append(v)
        for _, u in graph.in_edges[s]:
            if alive[u]:
                outdeg[u] -= 1
                if outdeg[u] == 0:
                    queue.append(u)
    keep = [i for i in range(n) if alive[i]]
    if len(keep) < n:
        logger.debug(f"Trimming removed {n - len(keep)} of {n} states")
    return graph.induced_subgraph(keep)


def build_ms(spec: PftSpec) -> LabeledGraph:
    """Deterministic essential presentation of the shift described by ``spec``.

    Args:
        spec: Any spec; it is normalized first (without completion)

    Returns:
        The presentation, possibly with zero states when the shift is empty
    """
    normal = normalize_pft(spec)
    graph = trim_essential(remove_forbidden(build_phased_full(normal), normal))
    if graph.is_empty:
        logger.warning(f"Shift is empty: {spec}")
    else:
        logger.debug(f"Presentation of {spec}: {graph.summary()}")
    return graph


def build_subgraph_h(spec: PftSpec) -> LabeledGraph:
    """Subgraph induced by the non-forbidden words in every phase.

    It presents the shift of finite type ``Y_{F^(0)}`` obtained by forbidding
    ``F^(0)`` at all positions.
    """
    _require_normal_form(spec)
    full = build_phased_full(spec)
    forbidden = spec.forbidden
    keep = [i for i, tag in enumerate(full.states) if tag.word not in forbidden]
    return full.induced_subgraph(keep)


def debruijn_presentation(spec: PftSpec) -> LabeledGraph:
    """Essential de Bruijn presentation of the SFT forbidding ``F^(0)`` everywhere."""
    normal = normalize_pft(spec)
    return build_ms(PftSpec(normal.alphabet, 1, (normal.forbidden,)))


def terminal_suffix_holds(graph: LabeledGraph, states: List[int], labels: List[int]) -> bool:
    """Check that a path of length ``>= ℓ`` ends at the state named by its last ``ℓ`` labels."""
    length = graph.word_length
    if len(labels) < length:
        return True
    end = graph.states[states[-1]]
    q = graph.alphabet.size
    return encode_word(end.word, q) == encode_word(labels[len(labels) - length:], q)


__all__ = [
    "build_phased_full",
    "remove_forbidden",
    "trim_essential",
    "build_ms",
    "build_subgraph_h",
    "debruijn_presentation",
    "terminal_suffix_holds",
]
