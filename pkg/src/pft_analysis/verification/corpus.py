"""Seeded random corpora of specs for the verification suites.

The binary corpus holds specs ``(F', ∅, ..., ∅)`` where ``Y = Y_{F'}`` is an
irreducible shift of finite type with ``B_ℓ(Y) = Σ^ℓ ∖ F'`` and a fixed
point ``a^∞``. A fixed point has period ``1 ≡ 1 (mod T)`` for every ``T``, so
each such spec must have an irreducible presentation.
"""

import logging
from typing import List, Optional

import numpy as np

from ..config import DEFAULT_CONFIG, VerificationConfig
from ..core.normalize import complete_forbidden_set
from ..core.spec import PftSpec
from ..core.words import Alphabet, decode_word
from ..graphs.components import is_irreducible, shift_is_irreducible
from ..presentation.ms import build_ms

logger = logging.getLogger(__name__)

PERIODS = (2, 3, 4)
LENGTHS = (2, 3)


def _random_sft(rng: np.random.Generator, q: int, length: int, size: int) -> PftSpec:
    codes = rng.choice(q ** length, size=size, replace=False)
    words = [decode_word(int(c), length, q) for c in codes]
    return PftSpec.sft(Alphabet(q), words)


def _with_period(sft: PftSpec, period: int) -> PftSpec:
    return PftSpec(sft.alphabet, period, (sft.forbidden,) + (frozenset(),) * (period - 1))


def is_fixed_point_instance(sft: PftSpec) -> bool:
    """``Y`` is irreducible, every allowed ``ℓ``-word occurs, and some ``a^ℓ`` is allowed."""
    length = sft.word_length
    if not any((a,) * length not in sft.forbidden for a in range(sft.q)):
        return False
    if complete_forbidden_set(sft).forbidden != sft.forbidden:
        return False
    return is_irreducible(build_ms(sft))


def binary_corpus(config: Optional[VerificationConfig] = None) -> List[PftSpec]:
    """Random binary specs with ``ℓ ∈ {2, 3}`` and ``T ∈ {2, 3, 4}`` (seeded)."""
    config = config or DEFAULT_CONFIG.verification
    rng = np.random.default_rng(config.random_seed)
    corpus: List[PftSpec] = []
    attempts = 0
    while len(corpus) < config.sft_corpus_size:
        attempts += 1
        if attempts > 200 * config.sft_corpus_size:
            raise RuntimeError(f"Only {len(corpus)} corpus specs found in {attempts} attempts")
        length = int(rng.choice(LENGTHS))
        size = int(rng.integers(1, 2 ** length // 2 + 1))
        sft = _random_sft(rng, 2, length, size)
        period = int(rng.choice(PERIODS))
        if is_fixed_point_instance(sft):
            corpus.append(_with_period(sft, period))
    logger.info(f"Binary corpus: {len(corpus)} specs from {attempts} draws")
    return corpus


def ternary_corpus(config: Optional[VerificationConfig] = None) -> List[PftSpec]:
    """Ternary specs with one or two phase-0 words over an irreducible SFT."""
    config = config or DEFAULT_CONFIG.verification
    rng = np.random.default_rng(config.random_seed + 1)
    corpus: List[PftSpec] = []
    attempts = 0
    while len(corpus) < config.ternary_corpus_size:
        attempts += 1
        if attempts > 200 * config.ternary_corpus_size:
            raise RuntimeError(f"Only {len(corpus)} ternary specs found in {attempts} attempts")
        length = int(rng.choice(LENGTHS))
        sft = _random_sft(rng, 3, length, int(rng.integers(1, 3)))
        period = int(rng.choice(PERIODS))
        if shift_is_irreducible(build_ms(sft))[0]:
            corpus.append(_with_period(sft, period))
    logger.info(f"Ternary corpus: {len(corpus)} specs from {attempts} draws")
    return corpus


__all__ = ["PERIODS", "LENGTHS", "binary_corpus", "ternary_corpus", "is_fixed_point_instance"]
