"""Equality and containment of presented shifts, and follower-set merging."""

import logging
from collections import deque
from typing import Dict, List, Optional, Tuple

from ..core.words import Word
from ..errors import RequiresDeterministicError
from ..presentation.graph import LabeledGraph
from .dfa import block_dfa, hopcroft_classes

logger = logging.getLogger(__name__)


def shifts_equal(a: LabeledGraph, b: LabeledGraph) -> bool:
    """True iff both graphs present the same shift (canonical block automata agree)."""
    if a.alphabet.size != b.alphabet.size:
        return False
    return block_dfa(a) == block_dfa(b)


def separating_word(a: LabeledGraph, b: LabeledGraph) -> Optional[Word]:
    """Shortlex-least block of ``a``'s shift that is not a block of ``b``'s.

    Breadth-first search of the product automaton; ``None`` when every block
    of ``a`` is a block of ``b``.
    """
    dfa_a, dfa_b = block_dfa(a), block_dfa(b)
    q = a.alphabet.size
    start = (dfa_a.start, dfa_b.start)
    parent: Dict[Tuple[int, int], Tuple[Tuple[int, int], int]] = {}
    seen = {start}
    queue = deque([start])

    def word_to(pair, last: int) -> Word:
        symbols = [last]
        while pair != start:
            pair, symbol = parent[pair]
            symbols.append(symbol)
        return tuple(reversed(symbols))

    while queue:
        pair = queue.popleft()
        sa, sb = pair
        for x in range(q):
            ta = dfa_a.transitions[sa][x]
            if ta < 0:
                continue
            tb = dfa_b.transitions[sb][x] if x < b.alphabet.size else -1
            if tb < 0:
                return word_to(pair, x)
            nxt = (ta, tb)
            if nxt not in seen:
                seen.add(nxt)
                parent[nxt] = (pair, x)
                queue.append(nxt)
    return None


def subshift_contains(a: LabeledGraph, b: LabeledGraph) -> bool:
    """True iff ``B(a) ⊆ B(b)``, i.e. the shift of ``a`` is contained in that of ``b``."""
    return separating_word(a, b) is None


def follower_minimize(graph: LabeledGraph) -> LabeledGraph:
    """Merge states with identical follower sets.

    Each merged state keeps the tag of its smallest member; the result is
    deterministic and presents the same shift.

    Raises:
        RequiresDeterministicError: If two edges leave a state with one label
    """
    if not graph.is_deterministic():
        raise RequiresDeterministicError("follower_minimize needs a deterministic graph")
    if graph.is_empty:
        return graph
    table = graph.transition_table().tolist()
    q = graph.alphabet.size
    class_of = hopcroft_classes(table, q)

    representatives: List[int] = []
    seen = set()
    for s in range(graph.num_states):
        if class_of[s] not in seen:
            seen.add(class_of[s])
            representatives.append(s)
    # classes ordered by smallest member
    rank = {class_of[s]: i for i, s in enumerate(representatives)}
    edges = []
    for i, s in enumerate(representatives):
        for a, t in graph.out_edges[s]:
            edges.append((i, rank[class_of[t]], a))
    merged = LabeledGraph(graph.alphabet, tuple(graph.states[s] for s in representatives),
                          tuple(edges), graph.word_length, graph.period)
    if merged.num_states < graph.num_states:
        logger.debug(f"Follower merging: {graph.num_states} -> {merged.num_states} states")
    return merged


__all__ = ["shifts_equal", "separating_word", "subshift_contains", "follower_minimize"]
