"""Labeled directed graphs presenting sofic shifts.

States are kept in a fixed order (phase-major, then word code for phased
constructions) and edges as ``(source, target, label)`` index triples sorted
by source, target and label, so every construction is reproducible.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from ..core.words import Alphabet, Word

Edge = Tuple[int, int, int]


def _dot_escape(text: str) -> str:
    """Make ``text`` safe inside a double-quoted DOT string."""
    return text.replace('\\', '\\\\').replace('"', '\\"')


class StateTag(NamedTuple):
    """State name: phase in ``[0, T)`` and a word of length ``ℓ``."""
    phase: int
    word: Word


@dataclass(frozen=True)
class LabeledGraph:
    """Finite edge-labeled directed graph over an alphabet."""
    alphabet: Alphabet
    states: Tuple[StateTag, ...]
    edges: Tuple[Edge, ...]
    word_length: int = 0
    period: int = 1

    def __post_init__(self):
        states = tuple(StateTag(int(s[0]), tuple(s[1])) for s in self.states)
        if len(set(states)) != len(states):
            raise ValueError("State tags must be unique")
        n, q = len(states), self.alphabet.size
        edges = tuple(sorted((int(u), int(v), int(a)) for u, v, a in self.edges))
        for u, v, a in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"Edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if not 0 <= a < q:
                raise ValueError(f"Edge label {a} outside alphabet of size {q}")
        object.__setattr__(self, 'states', states)
        object.__setattr__(self, 'edges', edges)

    @classmethod
    def from_edges(cls, alphabet: Alphabet, num_states: int,
                   edges: Iterable[Edge]) -> 'LabeledGraph':
        """Graph with anonymous states ``0 .. num_states - 1``.

        Anonymous states are tagged ``(i, ε)``.
        """
        return cls(alphabet, tuple(StateTag(i, ()) for i in range(num_states)), tuple(edges))

    @classmethod
    def empty(cls, alphabet: Alphabet, word_length: int = 0, period: int = 1) -> 'LabeledGraph':
        return cls(alphabet, (), (), word_length, period)

    @property
    def num_states(self) -> int:
        return len(self.states)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def is_empty(self) -> bool:
        return not self.states

    @cached_property
    def index(self) -> Dict[StateTag, int]:
        return {tag: i for i, tag in enumerate(self.states)}

    @cached_property
    def out_edges(self) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        """Per state, the ``(label, target)`` pairs in label order."""
        table: List[List[Tuple[int, int]]] = [[] for _ in self.states]
        for u, v, a in self.edges:
            table[u].append((a, v))
        return tuple(tuple(sorted(row)) for row in table)

    @cached_property
    def in_edges(self) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        """Per state, the ``(label, source)`` pairs in label order."""
        table: List[List[Tuple[int, int]]] = [[] for _ in self.states]
        for u, v, a in self.edges:
            table[v].append((a, u))
        return tuple(tuple(sorted(row)) for row in table)

    def is_deterministic(self) -> bool:
        """No state has two outgoing edges with the same label."""
        return all(len({a for a, _ in row}) == len(row) for row in self.out_edges)

    def transition_table(self) -> np.ndarray:
        """``(n, q)`` array of targets, ``-1`` where a label is missing.

        Raises:
            ValueError: If the graph is not deterministic
        """
        if not self.is_deterministic():
            raise ValueError("transition_table requires a deterministic graph")
        table = np.full((self.num_states, self.alphabet.size), -1, dtype=np.int64)
        for u, v, a in self.edges:
            table[u, a] = v
        return table

    def adjacency_matrix(self) -> np.ndarray:
        """Integer matrix counting edges ``i -> j`` (parallel edges add up)."""
        matrix = np.zeros((self.num_states, self.num_states), dtype=np.int64)
        for u, v, _ in self.edges:
            matrix[u, v] += 1
        return matrix

    def induced_subgraph(self, keep: Iterable[int]) -> 'LabeledGraph':
        """Subgraph induced by the given state indices (original order kept)."""
        kept = sorted(set(keep))
        remap = {old: new for new, old in enumerate(kept)}
        edges = tuple((remap[u], remap[v], a) for u, v, a in self.edges
                      if u in remap and v in remap)
        return LabeledGraph(self.alphabet, tuple(self.states[i] for i in kept), edges,
                            self.word_length, self.period)

    def read(self, start: int, labels: Sequence[int]) -> Optional[int]:
        """End state of the path from ``start`` reading ``labels`` (deterministic graphs)."""
        state = start
        for a in labels:
            nxt = [v for b, v in self.out_edges[state] if b == a]
            if not nxt:
                return None
            state = nxt[0]
        return state

    def state_name(self, i: int) -> str:
        tag = self.states[i]
        return f"{tag.phase}:{self.alphabet.format_word(tag.word)}"

    def to_networkx(self):
        """Export as a ``networkx.MultiDiGraph`` with ``label`` edge attributes."""
        import networkx as nx

        graph = nx.MultiDiGraph()
        for i, tag in enumerate(self.states):
            graph.add_node(i, phase=tag.phase, word=self.alphabet.format_word(tag.word))
        for u, v, a in self.edges:
            graph.add_edge(u, v, label=self.alphabet.symbols[a])
        return graph

    def to_dot(self, name: str = "G") -> str:
        """Graphviz DOT text with sorted states and edges."""
        lines = [f"digraph {name} {{", "  rankdir=LR;"]
        for i in range(self.num_states):
            lines.append(f'  s{i} [label="{_dot_escape(self.state_name(i))}"];')
        for u, v, a in self.edges:
            lines.append(f'  s{u} -> s{v} [label="{_dot_escape(self.alphabet.symbols[a])}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def summary(self) -> str:
        return f"{self.num_states} states, {self.num_edges} edges"


def random_path(graph: LabeledGraph, length: int,
                rng: np.random.Generator) -> Tuple[List[int], List[int]]:
    """Random walk of ``length`` edges; returns visited states and labels.

    The walk starts at a uniformly chosen state and picks uniformly among
    outgoing edges, so it never gets stuck on an essential graph.
    """
    if graph.is_empty:
        raise ValueError("Cannot walk on an empty graph")
    state = int(rng.integers(graph.num_states))
    states, labels = [state], []
    for _ in range(length):
        row = graph.out_edges[state]
        if not row:
            break
        label, state = row[int(rng.integers(len(row)))]
        states.append(state)
        labels.append(label)
    return states, labels


__all__ = ["StateTag", "LabeledGraph", "Edge", "random_path"]
