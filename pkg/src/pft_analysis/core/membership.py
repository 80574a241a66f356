"""Exact membership of periodic points in a periodic-finite-type shift."""

from math import lcm
from typing import FrozenSet, Optional

from .normalize import normalize_pft
from .spec import PftSpec, PhaseWitness
from .words import PeriodicWord, Word, encode_word


def occurrence_residues(block: Word, forbidden_codes: FrozenSet[int], length: int,
                        q: int, period: int) -> FrozenSet[int]:
    """Residues ``m mod T`` of positions where a forbidden word occurs in ``(block)^∞``.

    Positions ``0 .. lcm(p, T) - 1`` cover every (position mod p, position mod T)
    combination, so scanning them is exhaustive.
    """
    p = len(block)
    span = lcm(p, period)
    unrolled = block * ((span + length - 1) // p + 1)
    hit = set()
    for m in range(span):
        if encode_word(unrolled[m:m + length], q) in forbidden_codes:
            hit.add(m % period)
            if len(hit) == period:
                break
    return frozenset(hit)


def periodic_membership(spec: PftSpec, w: PeriodicWord,
                        forbidden_codes: Optional[FrozenSet[int]] = None) -> PhaseWitness:
    """Offsets ``r`` for which ``σ^r(w)`` avoids ``F^(0)`` at every phase-0 position.

    An occurrence of a forbidden word at position ``m`` of ``w`` rules out the
    offset ``r ≡ m (mod T)``; ``w`` lies in the shift iff some offset survives.

    Args:
        spec: Spec (normalized first if needed)
        w: Periodic point
        forbidden_codes: Precomputed radix codes of ``F^(0)`` (for tight loops)

    Returns:
        PhaseWitness with the admissible residues
    """
    if not spec.is_normal_form:
        spec = normalize_pft(spec)
    T = spec.period
    if not spec.forbidden:
        return PhaseWitness(frozenset(range(T)), T)
    q, length = spec.q, spec.word_length
    if forbidden_codes is None:
        forbidden_codes = frozenset(encode_word(f, q) for f in spec.forbidden)
    hit = occurrence_residues(w.block, forbidden_codes, length, q, T)
    return PhaseWitness(frozenset(range(T)) - hit, T)


__all__ = ["occurrence_residues", "periodic_membership"]
