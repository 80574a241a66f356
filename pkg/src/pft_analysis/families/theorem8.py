"""Shifts whose sequential period far exceeds their graphical period.

For ``k >= 2`` and ``n = k!``, forbid at phase 0 (period 2) every length-``2n``
window of every binary sequence of period ``n``. Points with a small period
``p <= k`` have period ``n`` as well, so they all get excluded, while the
presentation keeps period 2.
"""

import logging
from math import factorial
from typing import Optional

from ..config import DEFAULT_CONFIG, FamilyConfig
from ..core.spec import PftSpec
from ..core.words import Alphabet, all_words
from ..errors import DeskScaleExceededError

logger = logging.getLogger(__name__)


def periodic_windows(n: int, length: int):
    """All length-``length`` windows of binary sequences with period ``n``."""
    windows = set()
    repeats = length // n + 2
    for block in all_words(2, n):
        unrolled = block * repeats
        for offset in range(n):
            windows.add(unrolled[offset:offset + length])
    return frozenset(windows)


def theorem8_spec(k: int, force: bool = False, config: Optional[FamilyConfig] = None) -> PftSpec:
    """Period-2 spec forbidding the length-``2k!`` windows of period-``k!`` sequences.

    Args:
        k: Family index, at least 2
        force: Allow ``k`` above the configured limit

    Raises:
        DeskScaleExceededError: If ``k`` exceeds ``max_factorial_k`` without ``force``
    """
    config = config or DEFAULT_CONFIG.families
    if k < 2:
        raise ValueError(f"Family needs k >= 2, got k={k}")
    if k > config.max_factorial_k and not force:
        raise DeskScaleExceededError(
            f"k={k} gives 2^{factorial(k)} generator blocks; pass force to build it anyway")
    n = factorial(k)
    words = periodic_windows(n, 2 * n)
    logger.info(f"Family k={k}: {len(words)} forbidden words of length {2 * n}")
    return PftSpec(Alphabet.binary(), 2, (words, frozenset()))


__all__ = ["periodic_windows", "theorem8_spec"]
