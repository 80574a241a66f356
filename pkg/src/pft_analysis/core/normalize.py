"""Normal forms of forbidden schedules.

A spec is in normal form when only phase 0 forbids words and all of them share
one length ``ℓ``. Words forbidden at a later phase ``j`` are moved to phase 0
by forbidding every length ``j + |f|`` word ending in ``f``; shorter words are
then padded on the right with every possible continuation.
"""

import logging
from typing import FrozenSet, Iterable, Set

from .spec import PftSpec
from .words import Word, all_words

logger = logging.getLogger(__name__)


def expand_prefixes(words: Iterable[Word], length: int, q: int) -> Set[Word]:
    """All words of ``length`` having some member of ``words`` as a prefix."""
    expanded = set()
    for word in words:
        pad = length - len(word)
        if pad < 0:
            raise ValueError(f"Word {word} longer than target length {length}")
        for tail in all_words(q, pad):
            expanded.add(tuple(word) + tail)
    return expanded


def expand_suffixes(word: Word, extra: int, q: int) -> Set[Word]:
    """All words of length ``len(word) + extra`` ending in ``word``."""
    return {head + tuple(word) for head in all_words(q, extra)}


def normalize_sft(spec: PftSpec) -> PftSpec:
    """Equalize the forbidden-word lengths of a shift of finite type.

    Every forbidden word is replaced by all of its extensions to the longest
    forbidden length; the presented shift does not change.

    Args:
        spec: Spec with ``T = 1``

    Returns:
        Spec with all forbidden words of a single length ``ℓ``
    """
    if spec.period != 1:
        raise ValueError(f"normalize_sft expects T=1, got T={spec.period}")
    if not spec.forbidden:
        return spec
    length = max(len(w) for w in spec.forbidden)
    return PftSpec.sft(spec.alphabet, expand_prefixes(spec.forbidden, length, spec.q))


def _phase0_missing_words(spec: PftSpec) -> FrozenSet[Word]:
    """Length-ℓ words whose phase-0 state does not survive in the MS presentation."""
    from ..presentation.ms import build_ms

    graph = build_ms(spec)
    length = spec.word_length
    present = {tag.word for tag in graph.states if tag.phase == 0}
    return frozenset(w for w in all_words(spec.q, length) if w not in present)


def complete_forbidden_set(spec: PftSpec) -> PftSpec:
    """Add every length-``ℓ`` word that no point of the SFT contains.

    Afterwards ``B_ℓ(Y) = Σ^ℓ ∖ F'``. ``B_ℓ(Y)`` is read off the essential
    de Bruijn presentation, whose states are exactly the occurring words.
    """
    if spec.period != 1 or not spec.is_normal_form:
        raise ValueError("complete_forbidden_set expects an SFT in normal form")
    missing = _phase0_missing_words(spec)
    added = missing - spec.forbidden
    if added:
        logger.debug(f"Completion adds {len(added)} never-occurring words")
    # an empty F' keeps ℓ = 1, so missing is empty there as well
    return PftSpec.sft(spec.alphabet, spec.forbidden | missing)


def _complete_phase0(spec: PftSpec) -> PftSpec:
    from ..language.equality import shifts_equal
    from ..presentation.ms import build_ms

    missing = _phase0_missing_words(spec)
    if not missing - spec.forbidden:
        return spec
    completed = PftSpec(spec.alphabet, spec.period,
                        (spec.forbidden | missing,) + (frozenset(),) * (spec.period - 1))
    if not shifts_equal(build_ms(completed), build_ms(spec)):
        raise RuntimeError(f"Phase-0 completion changed the shift of {spec}")
    logger.debug(f"Phase-0 completion adds {len(missing - spec.forbidden)} words")
    return completed


def normalize_pft(spec: PftSpec, complete: bool = False) -> PftSpec:
    """Rewrite any spec into normal form presenting the same shift.

    Args:
        spec: Any spec
        complete: Also add the phase-0 words that occur at phase 0 in no point
            of the shift (for ``T = 1`` this is :func:`complete_forbidden_set`)

    Returns:
        Spec in normal form with the same period
    """
    q = spec.q
    phase0 = set(spec.forbidden)
    for j in range(1, spec.period):
        for word in spec.schedule[j]:
            phase0 |= expand_suffixes(word, j, q)

    if phase0:
        length = max(len(w) for w in phase0)
        phase0 = expand_prefixes(phase0, length, q)

    normal = PftSpec(spec.alphabet, spec.period,
                     (frozenset(phase0),) + (frozenset(),) * (spec.period - 1))
    if complete:
        normal = _complete_phase0(normal)
    return normal


__all__ = [
    "expand_prefixes",
    "expand_suffixes",
    "normalize_sft",
    "complete_forbidden_set",
    "normalize_pft",
]
