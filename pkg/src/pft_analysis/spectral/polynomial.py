"""Exact integer polynomials, characteristic polynomials and determinants.

All arithmetic is on Python integers (numpy ``object`` arrays for matrix
products) or ``fractions.Fraction``; nothing is rounded.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Sequence, Tuple, Union

import numpy as np

Number = Union[int, Fraction, float]


def _trim(coeffs: Sequence[int]) -> Tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial in ``t`` with integer coefficients, lowest degree first."""
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', _trim(int(c) for c in self.coeffs))

    @classmethod
    def constant(cls, c: int) -> 'IntPolynomial':
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> 'IntPolynomial':
        return cls((0,) * degree + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, t: Number) -> Number:
        value = 0
        for c in reversed(self.coeffs):
            value = value * t + c
        return value

    def __add__(self, other: 'IntPolynomial') -> 'IntPolynomial':
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> 'IntPolynomial':
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: 'IntPolynomial') -> 'IntPolynomial':
        return self + (-other)

    def __mul__(self, other) -> 'IntPolynomial':
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> 'IntPolynomial':
        """Multiply by ``t^k``."""
        return IntPolynomial((0,) * k + self.coeffs) if self.coeffs else self

    def derivative(self) -> 'IntPolynomial':
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                power = "t" if i == 1 else f"t^{i}"
                body = power if mag == 1 else f"{mag}*{power}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


T_POLY = IntPolynomial((0, 1))


def as_int_matrix(m) -> np.ndarray:
    """Copy into a square ``object`` array of Python integers."""
    rows = [[int(x) for x in row] for row in np.asarray(m).tolist()] if np.size(m) else []
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("Matrix must be square")
    matrix = np.empty((n, n), dtype=object)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            matrix[i, j] = x
    return matrix


def _identity(n: int) -> np.ndarray:
    eye = np.zeros((n, n), dtype=object)
    for i in range(n):
        eye[i, i] = 1
    return eye


def char_poly(m) -> IntPolynomial:
    """Characteristic polynomial ``det(tI - A)`` by Faddeev-LeVerrier.

    Args:
        m: Square integer matrix (any array-like)

    Returns:
        Monic integer polynomial of degree ``dim(m)``
    """
    a = as_int_matrix(m)
    n = a.shape[0]
    if n == 0:
        return IntPolynomial((1,))
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    eye = _identity(n)
    product = np.zeros((n, n), dtype=object)  # A·M_{k-1}
    for k in range(1, n + 1):
        product = a.dot(product + eye * coeffs[n - k + 1])
        trace = sum(product[i, i] for i in range(n))
        quotient, remainder = divmod(-trace, k)
        if remainder:
            raise ArithmeticError("Non-integral Faddeev-LeVerrier coefficient")
        coeffs[n - k] = quotient
    return IntPolynomial(tuple(coeffs))


def fraction_free_det(m) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    a = [[int(x) for x in row] for row in (m.tolist() if isinstance(m, np.ndarray) else m)]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def char_poly_at(m, t: int) -> int:
    """``det(tI - A)`` at an integer point, by elimination."""
    a = as_int_matrix(m)
    return fraction_free_det(_identity(a.shape[0]) * t - a)


def interpolate(points: Sequence[int], values: Sequence[int]) -> IntPolynomial:
    """Lagrange interpolation with exact rationals; the result must be integral."""
    n = len(points)
    total = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(zip(points, values)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(points):
            if j == i:
                continue
            # basis *= (t - xj)
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k, c in enumerate(basis):
            total[k] += yi * c / denom
    if any(c.denominator != 1 for c in total):
        raise ArithmeticError("Interpolated polynomial has non-integer coefficients")
    return IntPolynomial(tuple(int(c) for c in total))


def polynomial_matrix_det(evaluate: Callable[[int], np.ndarray], degree: int) -> IntPolynomial:
    """Determinant of a polynomial matrix of known degree bound.

    Args:
        evaluate: Returns the integer matrix at an integer point ``t``
        degree: Upper bound on the degree of the determinant

    Returns:
        The determinant as a polynomial in ``t``
    """
    points = list(range(degree + 1))
    values = [fraction_free_det(evaluate(t)) for t in points]
    return interpolate(points, values)


__all__ = [
    "IntPolynomial",
    "T_POLY",
    "as_int_matrix",
    "char_poly",
    "char_poly_at",
    "fraction_free_det",
    "interpolate",
    "polynomial_matrix_det",
]
