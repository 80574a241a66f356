"""Tests for labeled graphs and the phased de Bruijn construction."""

import numpy as np
import pytest

from pft_analysis.core import Alphabet, PftSpec
from pft_analysis.presentation import (
    LabeledGraph, StateTag, build_ms, build_phased_full, build_subgraph_h,
    debruijn_presentation, random_path, remove_forbidden, terminal_suffix_holds, trim_essential,
)


class TestConstruction:
    def test_phased_full(self, even_11):
        full = build_phased_full(even_11)
        assert full.num_states == 8
        assert full.num_edges == 16
        assert all(len(row) == 2 for row in full.out_edges)

    def test_remove_forbidden(self, even_11):
        graph = remove_forbidden(build_phased_full(even_11), even_11)
        assert graph.num_states == 7
        assert StateTag(0, (1, 1)) not in graph.index
        assert StateTag(1, (1, 1)) in graph.index

    def test_even_11(self, even_11_graph):
        assert even_11_graph.num_states == 7
        assert even_11_graph.num_edges == 12
        assert even_11_graph.is_deterministic()

    def test_golden_mean(self, golden_mean):
        graph = build_ms(golden_mean)
        assert graph.num_states == 3
        assert graph.num_edges == 5

    def test_empty_shift(self):
        graph = build_ms(PftSpec.from_strings([["0", "1"]]))
        assert graph.is_empty
        assert graph.num_edges == 0

    def test_trimming_removes_dead_states(self):
        # 0 must be followed by 0 but 00 is forbidden: only 1^∞ remains
        graph = build_ms(PftSpec.from_strings([["00", "01"]]))
        assert [tag.word for tag in graph.states] == [(1, 1)]

    def test_trimming_cascade_at_period_two(self):
        spec = PftSpec.from_strings([["00", "01"], []])
        pruned = remove_forbidden(build_phased_full(spec), spec)
        assert pruned.num_states == 6
        graph = trim_essential(pruned)
        # both phase-1 states ending in 0 can only step into a removed phase-0 state
        assert graph.num_states == 4
        assert set(graph.states) == {
            StateTag(0, (1, 0)), StateTag(0, (1, 1)), StateTag(1, (0, 1)), StateTag(1, (1, 1)),
        }
        assert StateTag(1, (0, 0)) not in graph.index
        assert StateTag(1, (1, 0)) not in graph.index

    def test_trim_is_idempotent(self, even_11_graph):
        assert trim_essential(even_11_graph) == even_11_graph

    def test_requires_normal_form(self):
        with pytest.raises(ValueError):
            build_phased_full(PftSpec.from_strings([[], ["1"]]))

    def test_subgraph_h(self, even_11):
        h = build_subgraph_h(even_11)
        assert h.num_states == 6
        assert h.num_edges == 10

    def test_debruijn(self, even_11, golden_mean):
        assert debruijn_presentation(even_11) == build_ms(golden_mean)


class TestLabeledGraph:
    def test_from_edges(self, binary):
        graph = LabeledGraph.from_edges(binary, 2, [(1, 0, 1), (0, 1, 0)])
        assert graph.edges == ((0, 1, 0), (1, 0, 1))
        assert graph.states[1] == StateTag(1, ())

    def test_bad_edge(self, binary):
        with pytest.raises(ValueError):
            LabeledGraph.from_edges(binary, 1, [(0, 1, 0)])
        with pytest.raises(ValueError):
            LabeledGraph.from_edges(binary, 1, [(0, 0, 2)])

    def test_adjacency_counts_parallel_edges(self, binary):
        full_shift = LabeledGraph.from_edges(binary, 1, [(0, 0, 0), (0, 0, 1)])
        assert full_shift.adjacency_matrix().tolist() == [[2]]

    def test_transition_table(self, even_11_graph):
        table = even_11_graph.transition_table()
        assert table.shape == (7, 2)
        assert (table == -1).sum() == 2

    def test_transition_table_needs_determinism(self, binary):
        graph = LabeledGraph.from_edges(binary, 2, [(0, 0, 0), (0, 1, 0)])
        assert not graph.is_deterministic()
        with pytest.raises(ValueError):
            graph.transition_table()

    def test_read(self, even_11_graph):
        start = even_11_graph.index[StateTag(0, (0, 0))]
        end = even_11_graph.read(start, [0, 1])
        assert even_11_graph.states[end] == StateTag(0, (0, 1))
        assert even_11_graph.read(even_11_graph.index[StateTag(1, (0, 1))], [1]) is None

    def test_dot(self, even_11_graph):
        dot = even_11_graph.to_dot()
        assert dot.startswith("digraph G {")
        assert dot.count("->") == 12
        assert '"0:00"' in dot
        assert even_11_graph.to_dot() == dot

    def test_dot_escapes_quote_and_backslash(self):
        alphabet = Alphabet.from_symbols(['"', '\\'])
        graph = LabeledGraph.from_edges(alphabet, 1, [(0, 0, 0), (0, 0, 1)])
        dot = graph.to_dot()
        assert 's0 -> s0 [label="\\""];' in dot
        assert 's0 -> s0 [label="\\\\"];' in dot
        assert '[label="""]' not in dot

    def test_networkx(self, even_11_graph):
        nx_graph = even_11_graph.to_networkx()
        assert nx_graph.number_of_nodes() == 7
        assert nx_graph.number_of_edges() == 12


class TestPaths:
    def test_terminal_suffix_on_random_paths(self, even_11_graph):
        rng = np.random.default_rng(0)
        for _ in range(200):
            states, labels = random_path(even_11_graph, int(rng.integers(2, 12)), rng)
            assert terminal_suffix_holds(even_11_graph, states, labels)

    def test_short_paths_hold_vacuously(self, even_11_graph):
        assert terminal_suffix_holds(even_11_graph, [0, 1], [1])

    def test_empty_graph_walk(self, binary):
        with pytest.raises(ValueError):
            random_path(LabeledGraph.empty(binary), 3, np.random.default_rng(0))
