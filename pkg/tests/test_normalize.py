"""Tests for normal forms and periodic-point membership."""

import pytest

from pft_analysis.core import (
    PeriodicWord, PftSpec, complete_forbidden_set, expand_prefixes, expand_suffixes,
    normalize_pft, normalize_sft, occurrence_residues, periodic_membership,
)
from pft_analysis.language import shifts_equal
from pft_analysis.presentation import build_ms


def words(*texts):
    return frozenset(tuple(int(c) for c in t) for t in texts)


class TestExpansion:
    def test_suffixes(self):
        assert expand_suffixes((1,), 1, 2) == set(words("01", "11"))

    def test_prefixes(self):
        assert expand_prefixes([(0,)], 2, 2) == set(words("00", "01"))

    def test_prefix_too_long(self):
        with pytest.raises(ValueError):
            expand_prefixes([(0, 0, 0)], 2, 2)


class TestNormalize:
    @pytest.mark.parametrize("schedule, expected", [
        ([[], ["1"]], words("01", "11")),
        ([["0"], ["1"]], words("00", "01", "11")),
        ([["11"], []], words("11")),
        ([[], [], ["1"]], words("001", "011", "101", "111")),
    ])
    def test_normalize_pft(self, schedule, expected):
        normal = normalize_pft(PftSpec.from_strings(schedule))
        assert normal.is_normal_form
        assert normal.period == len(schedule)
        assert normal.forbidden == expected

    def test_normal_form_is_fixed(self, even_11):
        assert normalize_pft(even_11) == even_11

    def test_normalize_keeps_the_shift(self):
        spec = PftSpec.from_strings([["0"], ["11"], []])
        assert shifts_equal(build_ms(spec), build_ms(normalize_pft(spec)))

    def test_normalize_sft(self):
        spec = PftSpec.from_strings([["1", "00"]])
        assert normalize_sft(spec).forbidden == words("00", "10", "11")

    def test_normalize_sft_rejects_periods(self, even_11):
        with pytest.raises(ValueError):
            normalize_sft(even_11)

    def test_completion_adds_missing_words(self):
        # 0 can never be followed by anything, so only 1^∞ survives
        spec = PftSpec.from_strings([["00", "01"]])
        assert complete_forbidden_set(spec).forbidden == words("00", "01", "10")

    def test_completion_of_complete_set(self, golden_mean):
        assert complete_forbidden_set(golden_mean) == golden_mean

    def test_phase0_completion_keeps_the_shift(self, even_11):
        assert normalize_pft(even_11, complete=True) == even_11
        spec = PftSpec.from_strings([["00", "01"], []])
        completed = normalize_pft(spec, complete=True)
        assert completed.forbidden >= spec.forbidden
        assert shifts_equal(build_ms(completed), build_ms(spec))


class TestMembership:
    @pytest.mark.parametrize("block, residues", [
        ((0,), {0, 1}),
        ((0, 0, 1, 1), {1}),
        ((0, 1, 1), set()),
        ((1,), set()),
        ((0, 1), {0, 1}),
    ])
    def test_even_11(self, even_11, block, residues):
        witness = periodic_membership(even_11, PeriodicWord(block))
        assert witness.admissible_residues == residues
        assert bool(witness) == bool(residues)

    def test_sft_membership(self, golden_mean):
        assert periodic_membership(golden_mean, PeriodicWord((0, 1)))
        assert not periodic_membership(golden_mean, PeriodicWord((0, 1, 1)))

    def test_unnormalized_input(self):
        spec = PftSpec.from_strings([[], ["1"]])
        assert periodic_membership(spec, PeriodicWord((1, 0)))
        assert not periodic_membership(spec, PeriodicWord((1,)))

    def test_occurrence_residues(self):
        codes = frozenset([3])  # 11
        assert occurrence_residues((0, 0, 1, 1), codes, 2, 2, 2) == {0}
        assert occurrence_residues((0, 1, 1), codes, 2, 2, 2) == {0, 1}
