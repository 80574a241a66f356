"""Tests for exact polynomials, Perron roots, entropy and the arranged matrices."""

import math
from fractions import Fraction

import numpy as np
import pytest

from pft_analysis.core import PftSpec
from pft_analysis.errors import ArrangementInapplicableError, RequiresDeterministicError
from pft_analysis.presentation import LabeledGraph, build_ms
from pft_analysis.spectral import (
    IntPolynomial, char_poly, char_poly_at, entropy, fraction_free_det, interpolate,
    largest_real_root, polynomial_matrix_det, roots_above, sft_subgraph_entropy, sturm_sequence,
    theorem3_arrange, theorem3_check, theorem3_identity,
)

GOLDEN_BITS = math.log2((1 + math.sqrt(5)) / 2)


class TestPolynomials:
    def test_golden_mean_char_poly(self, golden_mean):
        poly = char_poly(build_ms(golden_mean).adjacency_matrix())
        assert poly.coeffs == (0, -1, -1, 1)
        assert str(poly) == "t^3 - t^2 - t"

    def test_char_poly_agrees_with_point_values(self, even_11_graph):
        matrix = even_11_graph.adjacency_matrix()
        poly = char_poly(matrix)
        assert poly.degree == 7
        for t in range(-2, 3):
            assert char_poly_at(matrix, t) == poly(t)

    def test_determinant(self):
        assert fraction_free_det([[2, 1], [1, 1]]) == 1
        assert fraction_free_det([[0, 1], [1, 0]]) == -1
        assert fraction_free_det([[1, 2], [2, 4]]) == 0

    def test_interpolate(self):
        assert interpolate([0, 1, 2], [1, 2, 5]) == IntPolynomial((1, 0, 1))

    def test_polynomial_matrix_det(self):
        a = np.array([[1, 1], [1, 0]])
        poly = polynomial_matrix_det(lambda t: t * np.eye(2, dtype=np.int64) - a, 2)
        assert poly == char_poly(a)

    def test_arithmetic(self):
        p = IntPolynomial((1, 1))
        assert (p * p).coeffs == (1, 2, 1)
        assert (p - p).is_zero()
        assert IntPolynomial.monomial(3).degree == 3


class TestRoots:
    def test_sqrt_two(self):
        root = largest_real_root(IntPolynomial((-2, 0, 1)), 2)
        assert abs(root - math.sqrt(2)) < 1e-9

    def test_integer_root_is_exact(self):
        # (t - 2)(t - 1)
        assert largest_real_root(IntPolynomial((2, -3, 1)), 3) == 2.0

    def test_repeated_root(self):
        # (t - 1)^2
        assert largest_real_root(IntPolynomial((1, -2, 1)), 2) == 1.0

    def test_no_positive_root(self):
        assert largest_real_root(IntPolynomial((1, 1)), 1) == 0.0

    def test_roots_above(self):
        chain = sturm_sequence(IntPolynomial((-2, 0, 1)))
        assert roots_above(chain, Fraction(0)) == 1
        assert roots_above(chain, Fraction(-2)) == 2


class TestEntropy:
    def test_golden_mean(self, golden_mean):
        report = entropy(build_ms(golden_mean))
        assert abs(report.entropy_bits - GOLDEN_BITS) < 1e-9
        assert report.exact

    def test_full_shift(self, binary):
        full = LabeledGraph.from_edges(binary, 1, [(0, 0, 0), (0, 0, 1)])
        report = entropy(full)
        assert report.perron_root == 2.0
        assert report.entropy_bits == 1.0

    def test_empty_shift(self):
        report = entropy(build_ms(PftSpec.from_strings([["0", "1"]])))
        assert report.empty
        assert report.entropy_bits == float('-inf')

    def test_needs_determinism(self, binary):
        graph = LabeledGraph.from_edges(binary, 2, [(0, 0, 0), (0, 1, 0), (1, 0, 1)])
        with pytest.raises(RequiresDeterministicError):
            entropy(graph)

    def test_subgraph_entropy_is_smaller(self, even_11):
        gx, h = sft_subgraph_entropy(even_11)
        assert abs(h.entropy_bits - GOLDEN_BITS) < 1e-9
        assert h.perron_root <= gx.perron_root + 1e-12


class TestArrangement:
    def test_structure_for_11(self, even_11):
        arranged = theorem3_arrange(even_11)
        assert arranged.a_gx.shape == (7, 7)
        assert arranged.f_row == 6
        assert arranged.u_row == 3
        assert arranged.a_gx[0, 6] == 1
        assert np.array_equal(arranged.a_gx[3], arranged.a_gx[6])
        assert arranged.order_names()[0] == "0:01"
        assert arranged.order_names()[-1] == "1:11"

    def test_partner_state_sits_at_u_row(self):
        arranged = theorem3_arrange(PftSpec.from_strings([["10"], []]))
        assert arranged.u_row == 3
        assert arranged.order_names()[3] == "1:00"
        assert arranged.order_names()[-1] == "1:10"
        assert np.array_equal(arranged.a_gx[3], arranged.a_gx[6])

    def test_full_identity_for_11(self, even_11):
        identity = theorem3_identity(even_11)
        # phase-0 two-step walks form the all-ones 3x3 matrix
        assert identity.lhs == IntPolynomial((0, 0, 0, 0, 0, -3, 0, 1))
        assert identity.chi_h == IntPolynomial((0, 0, 1, 0, -3, 0, 1))
        assert identity.det_minor == IntPolynomial((0, 0, -1))
        assert identity.rhs == identity.lhs
        assert identity.det_b == identity.chi_h

    def test_largest_case(self):
        arranged = theorem3_arrange(PftSpec.from_strings([["111"], []]))
        assert arranged.a_gx.shape == (15, 15)
        assert arranged.u_row == 7

    @pytest.mark.parametrize("word", [
        "1", "0",
        "00", "01", "10", "11",
        "000", "001", "010", "011", "100", "101", "110", "111",
    ])
    def test_identity(self, word):
        spec = PftSpec.from_strings([[word], []])
        identity = theorem3_identity(spec)
        assert identity.holds
        assert identity.det_b_matches
        assert theorem3_check(spec)

    @pytest.mark.parametrize("schedule", [
        [["11", "00"], []],
        [["11"], ["00"]],
        [["11"], [], []],
    ])
    def test_inapplicable(self, schedule):
        with pytest.raises(ArrangementInapplicableError):
            theorem3_arrange(PftSpec.from_strings(schedule))
