"""Alphabets, words and periodic words.

Words are plain tuples of symbol indices in ``[0, q)``; the empty tuple is the
empty word. Graph constructions additionally address length-``n`` words by
their radix-``q`` code (first symbol most significant), see
:func:`encode_word` and :func:`decode_word`.
"""

import itertools
import string
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple

Word = Tuple[int, ...]

DEFAULT_GLYPHS = string.digits + string.ascii_lowercase


@dataclass(frozen=True)
class Alphabet:
    """Finite alphabet of ``q >= 2`` symbols with one printable glyph each."""
    size: int
    symbols: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.size < 2:
            raise ValueError(f"Alphabet needs at least 2 symbols, got q={self.size}")
        if not self.symbols:
            if self.size > len(DEFAULT_GLYPHS):
                raise ValueError(f"No default glyphs for q={self.size}; pass symbols explicitly")
            object.__setattr__(self, 'symbols', tuple(DEFAULT_GLYPHS[:self.size]))
        symbols = tuple(str(s) for s in self.symbols)
        if len(symbols) != self.size:
            raise ValueError(f"Expected {self.size} glyphs, got {len(symbols)}")
        if len(set(symbols)) != self.size:
            raise ValueError(f"Glyphs must be distinct: {symbols}")
        if any(len(s) != 1 for s in symbols):
            raise ValueError(f"Glyphs must be single characters: {symbols}")
        object.__setattr__(self, 'symbols', symbols)

    @classmethod
    def from_symbols(cls, symbols: Sequence[str]) -> 'Alphabet':
        return cls(len(symbols), tuple(symbols))

    @classmethod
    def binary(cls) -> 'Alphabet':
        return cls(2)

    @property
    def is_default(self) -> bool:
        return self.symbols == tuple(DEFAULT_GLYPHS[:self.size])

    def parse_word(self, text: str) -> Word:
        """Parse a glyph string into a word.

        Raises:
            ValueError: If ``text`` contains a glyph outside the alphabet
        """
        index = {s: i for i, s in enumerate(self.symbols)}
        word = []
        for pos, ch in enumerate(text):
            if ch not in index:
                raise ValueError(f"Unknown glyph {ch!r} at offset {pos} in {text!r}")
            word.append(index[ch])
        return tuple(word)

    def format_word(self, word: Sequence[int]) -> str:
        return ''.join(self.symbols[a] for a in word)

    def check_word(self, word: Sequence[int]) -> None:
        for a in word:
            if not 0 <= a < self.size:
                raise ValueError(f"Symbol {a} outside alphabet of size {self.size} in {tuple(word)}")


def encode_word(word: Sequence[int], q: int) -> int:
    """Radix-``q`` code of ``word`` with the first symbol most significant."""
    code = 0
    for a in word:
        code = code * q + a
    return code


def decode_word(code: int, length: int, q: int) -> Word:
    """Inverse of :func:`encode_word` for words of the given length."""
    symbols = [0] * length
    for i in range(length - 1, -1, -1):
        code, symbols[i] = divmod(code, q)
    return tuple(symbols)


def all_words(q: int, n: int) -> Iterator[Word]:
    """All words of length ``n`` in lexicographic (= code) order."""
    return itertools.product(range(q), repeat=n)


def primitive_period(word: Sequence[int]) -> int:
    """Smallest ``p`` such that ``word`` is a power of its length-``p`` prefix.

    The result always divides ``len(word)``; for the empty word it is 0.
    """
    n = len(word)
    if n == 0:
        return 0
    # KMP failure function of the word
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and word[i] != word[k]:
            k = fail[k - 1]
        if word[i] == word[k]:
            k += 1
        fail[i] = k
    p = n - fail[-1]
    return p if n % p == 0 else n


def least_rotation(word: Sequence[int]) -> Word:
    """Lexicographically least rotation of ``word``."""
    w = tuple(word)
    if not w:
        return w
    return min(w[i:] + w[:i] for i in range(len(w)))


def necklaces(q: int, n: int) -> Iterator[Word]:
    """Rotation-class representatives of ``Σ^n`` in lexicographic order.

    Each class is represented by its least rotation; non-primitive classes
    (such as ``0101``) are included.
    """
    if n == 0:
        yield ()
        return
    # Fredricksen-Kessler-Maiorana: prenecklaces in lex order, keep those whose
    # Lyndon prefix length divides n.
    a = [0] * (n + 1)

    def generate(t: int, p: int) -> Iterator[Word]:
        if t > n:
            if n % p == 0:
                yield tuple(a[1:])
            return
        a[t] = a[t - p]
        yield from generate(t + 1, p)
        for symbol in range(a[t - p] + 1, q):
            a[t] = symbol
            yield from generate(t + 1, t)

    yield from generate(1, 1)


@dataclass(frozen=True)
class PeriodicWord:
    """Bi-infinite sequence ``(block)^∞`` with index 0 at block position 0."""
    block: Word

    def __post_init__(self):
        if len(self.block) < 1:
            raise ValueError("A periodic word needs a non-empty repeating block")
        object.__setattr__(self, 'block', tuple(self.block))

    @property
    def period(self) -> int:
        return len(self.block)

    @property
    def primitive_period(self) -> int:
        return primitive_period(self.block)

    def symbol_at(self, i: int) -> int:
        return self.block[i % len(self.block)]

    def window(self, i: int, n: int) -> Word:
        return subword_at(self, i, n)

    def rotate(self, k: int) -> 'PeriodicWord':
        """The shifted sequence ``σ^k(w)``."""
        k %= len(self.block)
        return PeriodicWord(self.block[k:] + self.block[:k])

    def has_period(self, p: int) -> bool:
        return p >= 1 and all(self.symbol_at(i) == self.symbol_at(i + p) for i in range(self.period))

    def format(self, alphabet: Optional[Alphabet] = None) -> str:
        alphabet = alphabet or Alphabet(max(2, max(self.block) + 1))
        return f"({alphabet.format_word(self.block)})^inf"


def subword_at(w: PeriodicWord, i: int, n: int) -> Word:
    """Length-``n`` window of ``(block)^∞`` starting at position ``i``.

    Args:
        w: Periodic sequence
        i: Start index (any integer, reduced modulo the period)
        n: Window length (0 gives the empty word)
    """
    if n < 0:
        raise ValueError(f"Window length must be non-negative, got {n}")
    p = len(w.block)
    return tuple(w.block[(i + k) % p] for k in range(n))


__all__ = [
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
]
