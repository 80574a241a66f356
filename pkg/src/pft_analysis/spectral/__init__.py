"""Spectral Package

Exact adjacency-matrix invariants of presentations:
- Integer polynomials, characteristic polynomials, exact determinants
- Perron roots by Sturm bisection and entropy
- The block arrangement of period-2 single-word shifts and its identity
"""

from .polynomial import (
    IntPolynomial, T_POLY, as_int_matrix,
    char_poly, char_poly_at, fraction_free_det, interpolate, polynomial_matrix_det,
)
from .entropy import (
    SpectralReport, sturm_sequence, roots_above, largest_real_root,
    perron_root, entropy, sft_subgraph_entropy,
)
from .arrangement import (
    ArrangedMatrices, theorem3_arrange, Theorem3Identity, theorem3_identity, theorem3_check,
)

__all__ = [
    # Polynomials
    "IntPolynomial",
    "T_POLY",
    "as_int_matrix",
    "char_poly",
    "char_poly_at",
    "fraction_free_det",
    "interpolate",
    "polynomial_matrix_det",

    # Entropy
    "SpectralReport",
    "sturm_sequence",
    "roots_above",
    "largest_real_root",
    "perron_root",
    "entropy",
    "sft_subgraph_entropy",

    # Arrangement
    "ArrangedMatrices",
    "theorem3_arrange",
    "Theorem3Identity",
    "theorem3_identity",
    "theorem3_check",
]
