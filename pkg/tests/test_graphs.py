"""Tests for components, irreducibility and graph periods."""

import pytest

from pft_analysis.core import PftSpec
from pft_analysis.errors import AperiodicEmptyError
from pft_analysis.families import xk_spec
from pft_analysis.graphs import (
    graph_period, irreducible_components, is_irreducible, language_irreducibility_check,
    period_by_cycle_enumeration, scc, shift_is_irreducible,
)
from pft_analysis.presentation import LabeledGraph, build_ms


@pytest.fixture
def two_loops(binary):
    """Two disjoint self-loops labeled 0 and 1."""
    return LabeledGraph.from_edges(binary, 2, [(0, 0, 0), (1, 1, 1)])


class TestComponents:
    def test_even_11_irreducible(self, even_11_graph):
        assert scc(even_11_graph) == [list(range(7))]
        assert is_irreducible(even_11_graph)

    def test_two_loops(self, two_loops):
        assert scc(two_loops) == [[0], [1]]
        assert not is_irreducible(two_loops)
        assert len(irreducible_components(two_loops)) == 2

    def test_empty_graph(self, binary):
        empty = LabeledGraph.empty(binary)
        assert scc(empty) == []
        assert not is_irreducible(empty)

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6])
    def test_xk_irreducible(self, k):
        assert is_irreducible(build_ms(xk_spec(k)))

    def test_x7_reducible(self):
        assert not is_irreducible(build_ms(xk_spec(7)))


class TestShiftIrreducibility:
    def test_irreducible_graph(self, even_11_graph):
        irreducible, component = shift_is_irreducible(even_11_graph)
        assert irreducible
        assert component == even_11_graph

    def test_reducible_shift(self):
        # only 0^∞ and 1^∞
        graph = build_ms(PftSpec.from_strings([["01", "10"]]))
        assert shift_is_irreducible(graph) == (False, None)

    def test_reducible_graph_irreducible_shift(self, binary):
        # a transient state feeding a loop adds no blocks
        graph = LabeledGraph.from_edges(binary, 3, [(0, 0, 0), (1, 1, 0), (1, 0, 0), (2, 2, 0)])
        irreducible, component = shift_is_irreducible(graph)
        assert irreducible
        assert component.num_states == 1

    def test_language_check(self, golden_mean, two_loops):
        assert language_irreducibility_check(build_ms(golden_mean), 3)
        assert not language_irreducibility_check(two_loops, 2)


class TestPeriod:
    def test_even_11(self, even_11_graph):
        report = graph_period(even_11_graph)
        assert report.per_graph == 2
        assert report.irreducible
        assert set(report.per_state.values()) == {2}

    def test_golden_mean(self, golden_mean):
        assert graph_period(build_ms(golden_mean)).per_graph == 1

    def test_cycle_of_three(self, binary):
        cycle = LabeledGraph.from_edges(binary, 3, [(0, 1, 0), (1, 2, 0), (2, 0, 1)])
        assert graph_period(cycle).per_graph == 3
        assert period_by_cycle_enumeration(cycle) == {0: 3, 1: 3, 2: 3}

    def test_acyclic_graph(self, binary):
        with pytest.raises(AperiodicEmptyError):
            graph_period(LabeledGraph.from_edges(binary, 2, [(0, 1, 0)]))

    def test_acyclic_states_listed(self, binary):
        graph = LabeledGraph.from_edges(binary, 3, [(0, 0, 0), (1, 0, 1), (2, 2, 1)])
        report = graph_period(graph)
        assert report.acyclic_states == (1,)
        assert not report.irreducible

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_enumeration_agrees(self, k):
        graph = build_ms(xk_spec(k))
        assert graph_period(graph).per_state == period_by_cycle_enumeration(graph)
