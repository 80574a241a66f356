"""The binary sliding-block map ``ψ`` taking adjacent XORs.

``ψ(u)_i = u_i ⊕ u_{i+1}``, so a word of length ``n`` maps to one of length
``n - 1`` and a length-1 word maps to the empty word. Iterating ``m`` times
gives ``ψ^m(u)_i = Σ_k C(m, k) u_{i+k} mod 2``; for ``m = 2^j`` only the two
end terms survive and for ``m = 2^j - 1`` every term does.
"""

from typing import Optional, Sequence, Tuple

from ..core.words import Alphabet, PeriodicWord, Word


def _require_binary(u: Sequence[int], alphabet: Optional[Alphabet] = None) -> None:
    if alphabet is not None and alphabet.size != 2:
        raise ValueError(f"ψ is defined over the binary alphabet, got q={alphabet.size}")
    if any(a not in (0, 1) for a in u):
        raise ValueError(f"ψ is defined over the binary alphabet, got {tuple(u)}")


def _is_power_of_two(m: int) -> bool:
    return m > 0 and m & (m - 1) == 0


def psi_word(u: Sequence[int], alphabet: Optional[Alphabet] = None) -> Word:
    """Adjacent XORs of a nonempty binary word."""
    _require_binary(u, alphabet)
    if len(u) < 1:
        raise ValueError("ψ needs a nonempty word")
    return tuple(u[i] ^ u[i + 1] for i in range(len(u) - 1))


def psi_periodic(w: PeriodicWord) -> PeriodicWord:
    """Image of ``(block)^∞``, represented with the same block length."""
    block = w.block
    _require_binary(block)
    p = len(block)
    return PeriodicWord(tuple(block[i] ^ block[(i + 1) % p] for i in range(p)))


def psi_power_iterated(u: Sequence[int], m: int) -> Word:
    """``ψ^m(u)`` by repeated application."""
    word = tuple(u)
    for _ in range(m):
        word = psi_word(word)
    return word


def psi_power(u: Sequence[int], m: int) -> Word:
    """``ψ^m(u)`` with closed forms for ``m = 2^j`` and ``m = 2^j - 1``.

    Raises:
        ValueError: If ``m`` is negative or ``m > |u| - 1``
    """
    _require_binary(u)
    n = len(u)
    if m < 0 or m > n - 1:
        raise ValueError(f"ψ^{m} is undefined on a word of length {n}")
    if m == 0:
        return tuple(u)
    if _is_power_of_two(m):
        return tuple(u[i] ^ u[i + m] for i in range(n - m))
    if _is_power_of_two(m + 1):
        window = sum(u[:m + 1]) % 2
        out = [window]
        for i in range(1, n - m):
            window ^= u[i - 1] ^ u[i + m]
            out.append(window)
        return tuple(out)
    return psi_power_iterated(u, m)


def psi_preimages(v: Sequence[int]) -> Tuple[Word, Word]:
    """The two words ``u`` with ``ψ(u) = v``; they are complements of each other."""
    _require_binary(v)
    preimages = []
    for first in (0, 1):
        u = [first]
        for bit in v:
            u.append(u[-1] ^ bit)
        preimages.append(tuple(u))
    return preimages[0], preimages[1]


__all__ = [
    "psi_word",
    "psi_periodic",
    "psi_power",
    "psi_power_iterated",
    "psi_preimages",
]
