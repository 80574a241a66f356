"""Tests for block languages, block automata and shift equality."""

import pytest

from pft_analysis.core import PftSpec
from pft_analysis.errors import RequiresDeterministicError
from pft_analysis.language import (
    block_dfa, blocks_agree_up_to, blocks_of_length, follower_minimize, hopcroft_classes,
    iter_block_sets, separating_word, shifts_equal, subshift_contains,
)
from pft_analysis.presentation import LabeledGraph, build_ms


class TestBlocks:
    def test_golden_mean_blocks(self, golden_mean, binary):
        blocks = blocks_of_length(build_ms(golden_mean), 3)
        assert blocks.format(binary) == "{000,001,010,100,101}"
        assert (1, 1, 0) not in blocks

    def test_block_counts(self, golden_mean):
        counts = [len(b) for b in iter_block_sets(build_ms(golden_mean), 5)]
        assert counts == [1, 2, 3, 5, 8, 13]

    def test_even_11_blocks(self, even_11_graph):
        # 11 can sit at odd positions, so every 2-block occurs
        assert len(blocks_of_length(even_11_graph, 2)) == 4
        assert (1, 1, 1) not in blocks_of_length(even_11_graph, 3)

    def test_negative_length(self, golden_mean):
        with pytest.raises(ValueError):
            blocks_of_length(build_ms(golden_mean), -1)


class TestEquality:
    def test_sft_written_with_period_two(self, golden_mean):
        assert shifts_equal(build_ms(PftSpec.from_strings([["11"], ["11"]])), build_ms(golden_mean))

    def test_pft_differs_from_sft(self, even_11_graph, golden_mean):
        sft = build_ms(golden_mean)
        assert not shifts_equal(even_11_graph, sft)
        assert separating_word(even_11_graph, sft) == (1, 1)
        assert separating_word(sft, even_11_graph) is None
        assert subshift_contains(sft, even_11_graph)
        assert not subshift_contains(even_11_graph, sft)

    def test_shift_by_one_phase(self):
        even = build_ms(PftSpec.from_strings([["11"], []]))
        odd = build_ms(PftSpec.from_strings([[], ["11"]]))
        assert shifts_equal(even, odd)

    def test_empty_shifts(self):
        a = build_ms(PftSpec.from_strings([["0", "1"]]))
        b = build_ms(PftSpec.from_strings([["00", "01", "10", "11"], []]))
        assert shifts_equal(a, b)

    def test_agrees_with_block_comparison(self, even_11_graph, golden_mean):
        sft = build_ms(golden_mean)
        assert blocks_agree_up_to(even_11_graph, even_11_graph, 6)
        assert blocks_agree_up_to(even_11_graph, sft, 1)
        assert not blocks_agree_up_to(even_11_graph, sft, 2)

    def test_block_dfa_is_canonical(self, golden_mean):
        graph = build_ms(golden_mean)
        assert block_dfa(graph) == block_dfa(follower_minimize(graph))


class TestFollowerMinimize:
    def test_golden_mean_merges(self, golden_mean):
        graph = build_ms(golden_mean)
        merged = follower_minimize(graph)
        assert merged.num_states == 2
        assert shifts_equal(merged, graph)

    def test_nondeterministic(self, binary):
        graph = LabeledGraph.from_edges(binary, 2, [(0, 0, 0), (0, 1, 0), (1, 0, 1)])
        with pytest.raises(RequiresDeterministicError):
            follower_minimize(graph)

    def test_hopcroft(self):
        # states 0 and 1 behave identically, 2 is a dead end
        table = [[1, 2], [0, 2], [-1, -1]]
        classes = hopcroft_classes(table, 2)
        assert classes[0] == classes[1]
        assert classes[0] != classes[2]
