"""Forbidden-word schedules describing periodic-finite-type shifts.

A spec ``(F^(0), ..., F^(T-1))`` with period ``T`` describes the shift of all
bi-infinite sequences ``w`` for which some offset ``r`` makes every word of
``F^(j)`` absent from ``σ^r(w)`` at all positions ``i ≡ j (mod T)``. With
``T = 1`` this is an ordinary shift of finite type.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional, Sequence, Tuple

from .words import Alphabet, Word, encode_word


def _sort_key(q: int):
    return lambda w: (len(w), encode_word(w, q))


@dataclass(frozen=True)
class PftSpec:
    """Alphabet, period and forbidden schedule of a periodic-finite-type shift."""
    alphabet: Alphabet
    period: int
    schedule: Tuple[FrozenSet[Word], ...]

    def __post_init__(self):
        if self.period < 1:
            raise ValueError(f"Period must be positive, got T={self.period}")
        schedule = tuple(frozenset(tuple(w) for w in phase) for phase in self.schedule)
        if len(schedule) != self.period:
            raise ValueError(f"Schedule has {len(schedule)} phases, expected T={self.period}")
        for j, phase in enumerate(schedule):
            for word in phase:
                if len(word) == 0:
                    raise ValueError(f"Empty word in forbidden set of phase {j}")
                self.alphabet.check_word(word)
        object.__setattr__(self, 'schedule', schedule)

    @classmethod
    def sft(cls, alphabet: Alphabet, words: Iterable[Word]) -> 'PftSpec':
        """Shift of finite type: a single phase."""
        return cls(alphabet, 1, (frozenset(words),))

    @classmethod
    def from_strings(cls, schedule: Sequence[Iterable[str]],
                     alphabet: Optional[Alphabet] = None) -> 'PftSpec':
        """Build a spec from glyph strings, one collection per phase.

        Example:
            ``PftSpec.from_strings([["11"], []])`` is ``({11}, ∅)`` with ``T = 2``.
        """
        alphabet = alphabet or Alphabet.binary()
        phases = tuple(frozenset(alphabet.parse_word(w) for w in phase) for phase in schedule)
        return cls(alphabet, len(phases), phases)

    @property
    def q(self) -> int:
        return self.alphabet.size

    @property
    def forbidden(self) -> FrozenSet[Word]:
        """Phase-0 forbidden set ``F^(0)``."""
        return self.schedule[0]

    @property
    def is_normal_form(self) -> bool:
        if any(self.schedule[1:]):
            return False
        return len({len(w) for w in self.forbidden}) <= 1

    @property
    def word_length(self) -> int:
        """Common length ``ℓ`` of the phase-0 words (1 when there are none)."""
        lengths = {len(w) for w in self.forbidden}
        if len(lengths) > 1 or any(self.schedule[1:]):
            raise ValueError("word_length is only defined for specs in normal form")
        return lengths.pop() if lengths else 1

    @property
    def is_sft(self) -> bool:
        """True when every phase forbids the same set (the shift is then an SFT)."""
        return all(phase == self.schedule[0] for phase in self.schedule)

    def sorted_words(self, phase: int = 0):
        return sorted(self.schedule[phase], key=_sort_key(self.q))

    def format_phase(self, phase: int) -> str:
        words = [self.alphabet.format_word(w) for w in self.sorted_words(phase)]
        return "{" + ",".join(words) + "}" if words else "∅"

    def describe(self) -> str:
        phases = ", ".join(self.format_phase(j) for j in range(self.period))
        return f"T={self.period} q={self.q} F=({phases})"

    def __str__(self) -> str:
        return self.describe()


@dataclass(frozen=True)
class PhaseWitness:
    """Shift offsets ``r`` under which a periodic point avoids the schedule."""
    admissible_residues: FrozenSet[int]
    period: int

    @property
    def is_member(self) -> bool:
        return bool(self.admissible_residues)

    def __bool__(self) -> bool:
        return self.is_member


__all__ = ["PftSpec", "PhaseWitness"]
