"""The family ``X_k``: period 2, phase-0 words ``F_k = {u ∈ Σ^k : ψ^{k-1}(u) = 0}``.

``F_1 = {0}`` and ``F_{k+1} = ψ^{-1}(F_k)``, so ``|F_k| = 2^{k-1}``.
``ψ^{k-1}(u)`` is the parity of ``u`` over the positions ``i`` with
``C(k-1, i)`` odd, which by Lucas' theorem are those with ``i & (k-1) == i``.
"""

import logging
from typing import FrozenSet

from ..core.spec import PftSpec
from ..core.words import Alphabet, PeriodicWord, Word, decode_word
from .psi import psi_periodic, psi_preimages

logger = logging.getLogger(__name__)


def _require_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"X_k needs k >= 1, got k={k}")


def xk_forbidden(k: int) -> FrozenSet[Word]:
    """``F_k^(0)`` from the closed parity criterion."""
    _require_k(k)
    mask = 0
    for i in range(k):
        if i & (k - 1) == i:
            mask |= 1 << (k - 1 - i)  # first symbol is the top bit
    return frozenset(decode_word(x, k, 2) for x in range(2 ** k)
                     if bin(x & mask).count("1") % 2 == 0)


def xk_forbidden_recursive(k: int) -> FrozenSet[Word]:
    """``F_k^(0)`` by iterating ``F_{k+1} = ψ^{-1}(F_k)`` from ``F_1 = {0}``."""
    _require_k(k)
    words = {(0,)}
    for _ in range(k - 1):
        words = {u for v in words for u in psi_preimages(v)}
    return frozenset(words)


def xk_spec(k: int) -> PftSpec:
    """The period-2 spec ``(F_k^(0), ∅)``."""
    return PftSpec(Alphabet.binary(), 2, (xk_forbidden(k), frozenset()))


def odd_parity_filter(j: int) -> bool:
    """Check that every word of ``F_{2^j}^(0)`` has an even number of 1's."""
    if j < 0:
        raise ValueError(f"j must be non-negative, got {j}")
    odd = [w for w in xk_forbidden(2 ** j) if sum(w) % 2]
    if odd:
        logger.warning(f"F_{2 ** j} contains {len(odd)} words of odd weight")
    return not odd


def sequential_period_exponent(k: int) -> int:
    """The ``j`` with ``2^j + 1 <= k <= 2^{j+1}`` (k >= 2)."""
    if k < 2:
        raise ValueError(f"Exponent is defined for k >= 2, got k={k}")
    return (k - 1).bit_length() - 1


def predicted_t_seq(k: int) -> int:
    """``T_seq(X_k)``: 1 for ``k = 1``, else ``2^{j+1}``."""
    _require_k(k)
    return 1 if k == 1 else 2 ** (sequential_period_exponent(k) + 1)


def xk_period_witness(k: int) -> PeriodicWord:
    """A point of ``X_k`` with period ``T_seq(X_k)``.

    ``(0^{n-1} 1)^∞`` with ``n = 2^{j+1}`` has odd parity in every window of
    length ``n``, so it lies in ``X_n``; applying ``ψ`` ``n - k`` times moves it
    into ``X_k``.
    """
    _require_k(k)
    if k == 1:
        return PeriodicWord((1,))
    n = predicted_t_seq(k)
    point = PeriodicWord((0,) * (n - 1) + (1,))
    for _ in range(n - k):
        point = psi_periodic(point)
    return point


def xk_reducibility_witness(j: int, n: int) -> Word:
    """Central length-``n`` block of ``(0^{m-1}1)^∞ 0^m (10^{m-1})^∞`` with ``m = 2^j``."""
    if j < 0 or n < 0:
        raise ValueError(f"Need j >= 0 and n >= 0, got j={j}, n={n}")
    m = 2 ** j
    repeats = n // m + 2
    left = ((0,) * (m - 1) + (1,)) * repeats
    right = ((1,) + (0,) * (m - 1)) * repeats
    sequence = left + (0,) * m + right
    center = len(left) + m // 2
    start = center - n // 2
    return tuple(sequence[start:start + n])


__all__ = [
    "xk_forbidden",
    "xk_forbidden_recursive",
    "xk_spec",
    "odd_parity_filter",
    "sequential_period_exponent",
    "predicted_t_seq",
    "xk_period_witness",
    "xk_reducibility_witness",
]
