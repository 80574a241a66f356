"""Tests for sequential, graphical and descriptive periods."""

import pytest

from pft_analysis.config import PftConfig, SearchConfig
from pft_analysis.core import PftSpec
from pft_analysis.errors import TGraphUndefinedError
from pft_analysis.families import predicted_t_seq, theorem8_spec, xk_spec
from pft_analysis.periods import (
    ACHIEVABLE, NOT_FOUND, ConjectureReport, GraphPeriodBounds,
    divisibility_conjecture_check, graph_at_least_seq_check, member_blocks, period_triple,
    prop1_necessary_check, realized_periods, t_desc_search, t_graph_bounds, t_seq,
    t_seq_via_cycles,
)


@pytest.fixture
def small_config():
    """Search bounds small enough for unit tests."""
    return PftConfig(search=SearchConfig(max_period=8, max_len=5))


class TestSequentialPeriod:
    def test_even_11(self, even_11):
        result = t_seq(even_11)
        assert result.value == 1
        assert result.format_witness() == "(0)^inf"

    @pytest.mark.parametrize("k, expected", [
        (1, 1), (2, 2), (3, 4), (4, 4), (5, 8), (6, 8), (7, 8), (8, 8),
    ])
    def test_xk(self, k, expected):
        assert t_seq(xk_spec(k), max_period=8).value == expected

    def test_not_found(self):
        # every word is forbidden
        result = t_seq(PftSpec.from_strings([["0", "1"]]), max_period=4)
        assert not result.found
        assert result.format() == "unknown>4"

    def test_member_blocks(self, even_11):
        assert list(member_blocks(even_11, 4)) == [
            (0, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 1), (0, 1, 0, 1),
        ]

    def test_realized_periods(self, even_11):
        assert realized_periods(even_11, 6) == [1, 2, 3, 4, 5, 6]
        # only even periods fit a point of X_2
        assert realized_periods(xk_spec(2), 6) == [2, 4, 6]

    @pytest.mark.parametrize("k, excluded", [
        (2, range(1, 16, 2)),
        (3, [2, 6, 10, 14]),
        (5, [4, 12]),
    ])
    def test_no_small_periods(self, k, excluded):
        excluded = set(excluded)
        assert not set(realized_periods(xk_spec(k), max(excluded))) & excluded

    @pytest.mark.parametrize("k", [2, 3, 4, 5])
    def test_periods_are_multiples(self, k):
        step = predicted_t_seq(k)
        assert all(p % step == 0 for p in realized_periods(xk_spec(k), 16))

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_cycles_agree(self, k):
        spec = xk_spec(k)
        assert t_seq_via_cycles(spec).value == t_seq(spec).value

    def test_cycles_on_empty_shift(self):
        result = t_seq_via_cycles(PftSpec.from_strings([["0", "1"]]))
        assert result.format() == "unknown>16"
        assert result.method == "cycles"


class TestGraphicalPeriod:
    def test_x2(self):
        bounds = t_graph_bounds(xk_spec(2), 8)
        assert (bounds.lower, bounds.upper) == (2, 2)
        assert bounds.exact == 2
        assert bounds.format() == "2"

    def test_x4(self):
        bounds = t_graph_bounds(xk_spec(4), 8)
        assert bounds.lower == 4
        assert bounds.upper % 4 == 0

    def test_reducible_shift(self):
        with pytest.raises(TGraphUndefinedError):
            t_graph_bounds(PftSpec.from_strings([["01", "10"]]))

    def test_bounds_validation(self):
        with pytest.raises(ValueError):
            GraphPeriodBounds(lower=3, upper=2, evidence_bound=16)

    def test_graph_at_least_seq(self, small_config):
        for k in (1, 2, 4):
            assert graph_at_least_seq_check(xk_spec(k), small_config)

    def test_prop1(self, even_11, golden_mean, small_config):
        assert prop1_necessary_check(even_11, config=small_config)
        assert prop1_necessary_check(golden_mean)


class TestDescriptivePeriod:
    def test_sft_in_disguise(self):
        verdict = t_desc_search(PftSpec.from_strings([["11"], ["11"]]))
        assert verdict.t_desc == 1
        assert verdict.properness() == "sft(length 2)"
        assert not verdict.is_proper

    def test_even_11(self, even_11):
        verdict = t_desc_search(even_11, max_len=6)
        assert verdict.t_desc == 2
        assert verdict.properness() == "proper-up-to(6)"
        assert [row.verdict for row in verdict.rows] == [NOT_FOUND, ACHIEVABLE]
        assert verdict.format() == "2"

    def test_period_three(self):
        verdict = t_desc_search(PftSpec.from_strings([["11"], [], []]), max_len=4)
        assert verdict.t_desc == 3
        assert verdict.rows[-1].reason == "multiple of T=3"

    @pytest.mark.parametrize("period", [2, 3, 5])
    def test_single_word_at_phase_zero(self, period):
        spec = PftSpec.from_strings([["11"]] + [[] for _ in range(period - 1)])
        verdict = t_desc_search(spec, max_len=8)
        assert verdict.t_desc == period
        assert verdict.properness() == "proper-up-to(8)"

    @pytest.mark.parametrize("k", [1, 2])
    def test_xk(self, k):
        assert t_desc_search(xk_spec(k), max_len=5).t_desc == 2

    def test_rows_to_dataframe(self, even_11):
        df = t_desc_search(even_11, max_len=4).to_dataframe()
        assert list(df['t_star']) == [1, 2]


class TestFactorialFamilyPeriods:
    """k = 2: the sequential period exceeds the graphical one."""

    @pytest.fixture(scope="class")
    def spec(self):
        return theorem8_spec(2)

    def test_proper(self, spec):
        assert t_desc_search(spec, max_len=8).properness() == "proper-up-to(8)"

    def test_sequential_period(self, spec):
        result = t_seq(spec, max_period=16)
        assert result.found
        assert result.value == 3

    def test_graph_period_bounds(self, spec):
        bounds = t_graph_bounds(spec)
        assert bounds.upper == 2
        assert 2 % bounds.lower == 0


class TestPeriodTriple:
    def test_x2(self, small_config):
        triple = period_triple(xk_spec(2), small_config)
        data = triple.to_dict()
        assert (data['t_seq'], data['t_graph'], data['t_desc']) == ('2', '2', '2')
        assert data['bounds']['max_len'] == 5

    def test_reducible_shift_has_no_graph_period(self, small_config):
        triple = period_triple(PftSpec.from_strings([["01", "10"]]), small_config)
        assert triple.t_graph is None
        assert triple.to_dict()['t_graph'] == "undefined (t-graph-undefined)"

    def test_divisibility(self, small_config):
        report = divisibility_conjecture_check(xk_spec(2), config=small_config)
        assert report.resolved
        assert report.consistent
        assert report.divides_upper

    def test_unresolved_report(self):
        report = ConjectureReport(None, 2, 4)
        assert not report.resolved
        assert report.consistent is None
