"""Deterministic automata for block languages.

The block language of an essential graph is accepted by the subset automaton
started from the set of all states, with every nonempty subset accepting and
the empty subset (the dead state) dropped. After Hopcroft minimization and a
breadth-first renumbering from the start state the automaton is canonical, so
two shifts are equal exactly when their automata are equal.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Set, Tuple

from ..presentation.graph import LabeledGraph
from ..presentation.ms import trim_essential

logger = logging.getLogger(__name__)

Table = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class BlockDfa:
    """Partial DFA with all states accepting; ``-1`` marks a missing transition."""
    transitions: Table
    start: int = 0
    minimized: bool = False

    @property
    def num_states(self) -> int:
        return len(self.transitions)

    @property
    def all_accepting(self) -> bool:
        return True

    def accepts(self, word: Sequence[int]) -> bool:
        state = self.start
        for a in word:
            state = self.transitions[state][a]
            if state < 0:
                return False
        return True


def hopcroft_classes(transitions: Sequence[Sequence[int]], q: int) -> List[int]:
    """Coarsest partition of live states with equal futures.

    All live states start in one block; a missing transition leads to an
    implicit rejecting dead state. Returns a class id per state.
    """
    n = len(transitions)
    if n == 0:
        return []
    dead = n
    # predecessors[a][t] = states reaching t on symbol a (dead included)
    predecessors: List[List[List[int]]] = [[[] for _ in range(n + 1)] for _ in range(q)]
    for s in range(n):
        for a in range(q):
            t = transitions[s][a]
            predecessors[a][t if t >= 0 else dead].append(s)
    for a in range(q):
        predecessors[a][dead].append(dead)

    partitions: Set[FrozenSet[int]] = {frozenset(range(n)), frozenset([dead])}
    block_of: Dict[int, FrozenSet[int]] = {s: p for p in partitions for s in p}
    work_queue: List[FrozenSet[int]] = [frozenset([dead])]

    while work_queue:
        splitter = work_queue.pop(0)
        for a in range(q):
            preds = set()
            for t in splitter:
                preds.update(predecessors[a][t])
            touched = {block_of[s] for s in preds}
            for partition in touched:
                in_pred = partition & preds
                not_in_pred = partition - preds
                if not in_pred or not not_in_pred:
                    continue
                partitions.discard(partition)
                in_pred, not_in_pred = frozenset(in_pred), frozenset(not_in_pred)
                partitions.add(in_pred)
                partitions.add(not_in_pred)
                for s in in_pred:
                    block_of[s] = in_pred
                for s in not_in_pred:
                    block_of[s] = not_in_pred
                if partition in work_queue:
                    work_queue.remove(partition)
                    work_queue.extend([in_pred, not_in_pred])
                else:
                    work_queue.append(in_pred if len(in_pred) <= len(not_in_pred) else not_in_pred)

    class_of = [0] * n
    live = sorted((p for p in partitions if dead not in p), key=min)
    for index, partition in enumerate(live):
        for s in partition:
            class_of[s] = index
    return class_of


def canonical_form(transitions: Sequence[Sequence[int]], start: int, q: int) -> Table:
    """Renumber states breadth-first from ``start`` in symbol order; drop unreachable ones."""
    order: Dict[int, int] = {start: 0}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        for a in range(q):
            t = transitions[s][a]
            if t >= 0 and t not in order:
                order[t] = len(order)
                queue.append(t)
    table = [None] * len(order)
    for s, new in order.items():
        table[new] = tuple(order[t] if t >= 0 else -1 for t in transitions[s])
    return tuple(table)


def subset_automaton(graph: LabeledGraph) -> BlockDfa:
    """Subset construction from the set of all states (dead subset omitted).

    States are numbered in the order their shortlex-least word is discovered.
    """
    q = graph.alphabet.size
    successors: List[List[List[int]]] = [[[] for _ in range(q)] for _ in range(graph.num_states)]
    for u, v, a in graph.edges:
        successors[u][a].append(v)

    start = frozenset(range(graph.num_states))
    numbering: Dict[FrozenSet[int], int] = {start: 0}
    rows: List[List[int]] = []
    queue = deque([start])
    while queue:
        subset = queue.popleft()
        row = []
        for a in range(q):
            image = frozenset(v for s in subset for v in successors[s][a])
            if not image:
                row.append(-1)
                continue
            if image not in numbering:
                numbering[image] = len(numbering)
                queue.append(image)
            row.append(numbering[image])
        rows.append(row)
    return BlockDfa(tuple(tuple(r) for r in rows), 0, minimized=False)


def minimize(dfa: BlockDfa, q: int) -> BlockDfa:
    """Hopcroft minimization followed by canonical renumbering."""
    class_of = hopcroft_classes(dfa.transitions, q)
    quotient: Dict[int, Tuple[int, ...]] = {}
    for s, row in enumerate(dfa.transitions):
        quotient.setdefault(class_of[s], tuple(class_of[t] if t >= 0 else -1 for t in row))
    table = [quotient[c] for c in range(len(quotient))]
    return BlockDfa(canonical_form(table, class_of[dfa.start], q), 0, minimized=True)


def block_dfa(graph: LabeledGraph, minimized: bool = True) -> BlockDfa:
    """Automaton accepting exactly the block language of the presented shift.

    The graph is trimmed first. The empty graph yields a single state with no
    transitions, accepting only the empty word.
    """
    graph = trim_essential(graph)
    q = graph.alphabet.size
    if graph.is_empty:
        return BlockDfa(((-1,) * q,), 0, minimized=True)
    dfa = subset_automaton(graph)
    logger.debug(f"Subset automaton: {dfa.num_states} states from {graph.num_states} graph states")
    return minimize(dfa, q) if minimized else dfa


__all__ = [
    "BlockDfa",
    "hopcroft_classes",
    "canonical_form",
    "subset_automaton",
    "minimize",
    "block_dfa",
]
