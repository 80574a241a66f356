"""Perron roots and entropy of presented shifts.

The entropy of a shift with a deterministic presentation is ``log2 λ`` where
``λ`` is the largest eigenvalue of the adjacency matrix. ``λ`` is the largest
of the Perron roots of the strongly connected blocks, and for each block it
is the largest real root of the block's characteristic polynomial. That root
is located by bisection on ``[0, max row sum]`` using Sturm sequences to count
the distinct real roots above the midpoint, so repeated roots need no special
care and every comparison is exact.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

import numpy as np

from ..config import DEFAULT_CONFIG, SpectralConfig
from ..core.normalize import normalize_pft
from ..core.spec import PftSpec
from ..errors import RequiresDeterministicError
from ..graphs.components import component_has_cycle, scc
from ..presentation.graph import LabeledGraph
from ..presentation.ms import build_ms, build_subgraph_h, trim_essential
from .polynomial import IntPolynomial, char_poly

logger = logging.getLogger(__name__)


@dataclass
class SpectralReport:
    """Characteristic polynomial, Perron root and entropy of a presentation."""
    char_poly: Optional[IntPolynomial]
    perron_root: float
    entropy_bits: float
    exact: bool = True
    empty: bool = False

    def __post_init__(self):
        if self.perron_root < 0:
            raise ValueError(f"Perron root must be non-negative, got {self.perron_root}")


def _pseudo_remainder(a: IntPolynomial, b: IntPolynomial):
    """Remainder of ``lc(b)^k · a`` divided by ``b``, and the sign of ``lc(b)^k``."""
    r = list(a.coeffs)
    lead, db = b.leading_coefficient, b.degree
    steps = 0
    while len(r) - 1 >= db and r:
        top = r[-1]
        shift = len(r) - 1 - db
        r = [lead * x for x in r]
        for i, c in enumerate(b.coeffs):
            r[i + shift] -= top * c
        while r and r[-1] == 0:
            r.pop()
        steps += 1
    sign = -1 if (lead < 0 and steps % 2 == 1) else 1
    return IntPolynomial(tuple(r)), sign


def _primitive_part(p: IntPolynomial) -> IntPolynomial:
    content = 0
    for c in p.coeffs:
        content = math.gcd(content, c)
    return IntPolynomial(tuple(c // content for c in p.coeffs)) if content > 1 else p


def _exact_quotient(p: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """``p / g`` for a primitive divisor ``g`` of ``p``."""
    r = list(p.coeffs)
    out = [0] * (p.degree - g.degree + 1)
    for k in range(len(out) - 1, -1, -1):
        c, rem = divmod(r[k + g.degree], g.leading_coefficient)
        if rem:
            raise ArithmeticError(f"{g} does not divide {p}")
        out[k] = c
        for i, gc in enumerate(g.coeffs):
            r[k + i] -= c * gc
    return IntPolynomial(tuple(out))


def _chain(p: IntPolynomial) -> List[IntPolynomial]:
    chain = [p, _primitive_part(p.derivative())]
    while chain[-1].degree > 0:
        remainder, sign = _pseudo_remainder(chain[-2], chain[-1])
        if remainder.is_zero():
            break
        # -rem(a, b) up to a positive factor
        chain.append(_primitive_part(remainder * (-sign)))
    return chain


def sturm_sequence(p: IntPolynomial) -> List[IntPolynomial]:
    """Sturm chain of the square-free part of ``p``, kept integral.

    Repeated roots are divided out first so that evaluating the chain at a
    root never makes every member vanish.
    """
    p = _primitive_part(p)
    chain = _chain(p)
    gcd = chain[-1]
    if gcd.degree > 0:
        chain = _chain(_exact_quotient(p, gcd))
    return chain


def _sign_at(p: IntPolynomial, x: Fraction) -> int:
    num, den = x.numerator, x.denominator
    d = p.degree
    value = sum(c * num ** i * den ** (d - i) for i, c in enumerate(p.coeffs))
    return (value > 0) - (value < 0)


def _variations(signs) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def roots_above(chain: List[IntPolynomial], x: Fraction) -> int:
    """Number of distinct real roots of ``chain[0]`` greater than ``x``."""
    at_x = _variations(_sign_at(p, x) for p in chain)
    at_inf = _variations((p.leading_coefficient > 0) - (p.leading_coefficient < 0) for p in chain)
    return at_x - at_inf


def largest_real_root(p: IntPolynomial, upper: int, tolerance: float = 1e-12) -> float:
    """Largest real root of ``p`` in ``[0, upper]`` (0 when there is none above 0).

    Integer roots are returned exactly.
    """
    chain = sturm_sequence(p)
    lo, hi = Fraction(0), Fraction(upper)
    if roots_above(chain, lo) == 0:
        return 0.0
    # invariant: the largest root lies in (lo, hi]
    while hi - lo > Fraction(tolerance):
        mid = (lo + hi) / 2
        if roots_above(chain, mid) > 0:
            lo = mid
        else:
            hi = mid
    for candidate in {math.floor(hi), math.ceil(lo)}:
        if lo < candidate <= hi and p(candidate) == 0:
            return float(candidate)
    return float(hi)


def perron_root(graph: LabeledGraph, config: Optional[SpectralConfig] = None) -> tuple:
    """Largest eigenvalue of the adjacency matrix, from its strongly connected blocks.

    Returns:
        ``(λ, exact)`` where ``exact`` is False if some block was too large for
        exact root isolation and a floating-point eigenvalue was used instead
    """
    config = config or DEFAULT_CONFIG.spectral
    matrix = graph.adjacency_matrix()
    best, exact = 0.0, True
    for component in scc(graph):
        if not component_has_cycle(graph, component):
            continue
        block = matrix[np.ix_(component, component)]
        upper = int(block.sum(axis=1).max())
        if len(component) > config.exact_root_limit:
            logger.warning(f"Block of {len(component)} states exceeds exact root limit "
                           f"{config.exact_root_limit}; using floating eigenvalues")
            root = float(np.max(np.abs(np.linalg.eigvals(block.astype(float)))))
            exact = False
        else:
            root = largest_real_root(char_poly(block), upper, config.tolerance)
        best = max(best, root)
    return best, exact


def entropy(graph: LabeledGraph, config: Optional[SpectralConfig] = None) -> SpectralReport:
    """Entropy ``log2 λ`` of the shift presented by a deterministic graph.

    The empty shift gets ``λ = 0`` and entropy ``-inf`` with ``empty=True``.

    Raises:
        RequiresDeterministicError: If the graph is not deterministic
    """
    config = config or DEFAULT_CONFIG.spectral
    if not graph.is_deterministic():
        raise RequiresDeterministicError("Entropy needs a deterministic presentation")

    poly = None
    if graph.num_states <= config.exact_root_limit:
        poly = char_poly(graph.adjacency_matrix())
    else:
        logger.warning(f"Skipping characteristic polynomial of {graph.num_states} states")

    root, exact = perron_root(graph, config)
    if root == 0.0:
        logger.warning("Presented shift is empty; entropy reported as -inf")
        return SpectralReport(poly, 0.0, float('-inf'), exact, empty=True)
    return SpectralReport(poly, root, math.log2(root), exact)


def sft_subgraph_entropy(spec: PftSpec, config: Optional[SpectralConfig] = None):
    """Entropies of the shift and of its underlying shift of finite type.

    The SFT forbidding ``F^(0)`` at every position is presented by a subgraph
    of the shift's presentation, so its entropy can never be larger.

    Returns:
        ``(report for G_X, report for H)``
    """
    normal = normalize_pft(spec)
    h = trim_essential(build_subgraph_h(normal))
    return entropy(build_ms(normal), config), entropy(h, config)


__all__ = [
    "SpectralReport",
    "sturm_sequence",
    "roots_above",
    "largest_real_root",
    "perron_root",
    "entropy",
    "sft_subgraph_entropy",
]
