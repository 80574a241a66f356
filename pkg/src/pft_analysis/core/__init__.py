"""Shift Core Package

Alphabets, words, periodic points, forbidden schedules and their normal forms,
and exact membership of periodic points.
"""

from .words import (
    Word, Alphabet, PeriodicWord,
    encode_word, decode_word, all_words,
    primitive_period, least_rotation, necklaces, subword_at,
)
from .spec import PftSpec, PhaseWitness
from .normalize import (
    expand_prefixes, expand_suffixes,
    normalize_sft, complete_forbidden_set, normalize_pft,
)
from .membership import occurrence_residues, periodic_membership

__all__ = [
    # Words
    "Word",
    "Alphabet",
    "PeriodicWord",
    "encode_word",
    "decode_word",
    "all_words",
    "primitive_period",
    "least_rotation",
    "necklaces",
    "subword_at",

    # Specs
    "PftSpec",
    "PhaseWitness",

    # Normal forms
    "expand_prefixes",
    "expand_suffixes",
    "normalize_sft",
    "complete_forbidden_set",
    "normalize_pft",

    # Membership
    "occurrence_residues",
    "periodic_membership",
]
