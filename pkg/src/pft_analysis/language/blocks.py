"""Block languages ``B_n(S)`` of presented shifts."""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, Optional

from ..core.words import Alphabet, Word, encode_word
from ..presentation.graph import LabeledGraph
from ..presentation.ms import trim_essential


@dataclass(frozen=True)
class BlockSet:
    """The length-``n`` blocks of a shift."""
    n: int
    words: FrozenSet[Word]

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word) -> bool:
        return tuple(word) in self.words

    def sorted_words(self, q: int):
        return sorted(self.words, key=lambda w: encode_word(w, q))

    def format(self, alphabet: Alphabet) -> str:
        return "{" + ",".join(alphabet.format_word(w) for w in self.sorted_words(alphabet.size)) + "}"


def iter_block_sets(graph: LabeledGraph, max_n: int) -> Iterator[BlockSet]:
    """Yield ``B_0, B_1, ..., B_max_n`` of the presented shift.

    Words are tracked together with the set of states where they can end, so
    each level extends the previous one instead of re-enumerating paths.
    """
    graph = trim_essential(graph)
    ends: Dict[Word, FrozenSet[int]] = {(): frozenset(range(graph.num_states))}
    yield BlockSet(0, frozenset(ends))
    for n in range(1, max_n + 1):
        nxt: Dict[Word, set] = {}
        for word, states in ends.items():
            for s in states:
                for a, v in graph.out_edges[s]:
                    nxt.setdefault(word + (a,), set()).add(v)
        ends = {w: frozenset(s) for w, s in nxt.items()}
        yield BlockSet(n, frozenset(ends))


def blocks_of_length(graph: LabeledGraph, n: int) -> BlockSet:
    """Labels of all length-``n`` paths of the (trimmed) graph; ``B_0 = {ε}``."""
    if n < 0:
        raise ValueError(f"Block length must be non-negative, got {n}")
    block_set: Optional[BlockSet] = None
    for block_set in iter_block_sets(graph, n):
        pass
    return block_set


def blocks_agree_up_to(a: LabeledGraph, b: LabeledGraph, n: int) -> bool:
    """Brute-force comparison of ``B_k`` for ``k = 0 .. n``."""
    return all(x.words == y.words for x, y in zip(iter_block_sets(a, n), iter_block_sets(b, n)))


__all__ = ["BlockSet", "iter_block_sets", "blocks_of_length", "blocks_agree_up_to"]
