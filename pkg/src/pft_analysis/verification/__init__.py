"""Verification suites: the published results checked on concrete instances."""

from .corpus import PERIODS, LENGTHS, binary_corpus, is_fixed_point_instance, ternary_corpus
from .suites import GOLDEN_MEAN_ENTROPY, SUITES, CheckResult, run_suites

__all__ = [
    # Corpora
    "PERIODS",
    "LENGTHS",
    "binary_corpus",
    "ternary_corpus",
    "is_fixed_point_instance",

    # Suites
    "CheckResult",
    "SUITES",
    "run_suites",
    "GOLDEN_MEAN_ENTROPY",
]
