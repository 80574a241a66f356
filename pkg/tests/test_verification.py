"""Tests for the random corpora and the verification suites."""

import pytest

from pft_analysis.config import PftConfig, VerificationConfig
from pft_analysis.core import PftSpec
from pft_analysis.verification import (
    PERIODS, SUITES, binary_corpus, is_fixed_point_instance, run_suites, ternary_corpus,
)


@pytest.fixture
def small_config():
    return PftConfig(verification=VerificationConfig(sft_corpus_size=5, ternary_corpus_size=3,
                                                     random_paths=50))


class TestCorpus:
    def test_binary_corpus(self):
        corpus = binary_corpus(VerificationConfig(sft_corpus_size=5))
        assert len(corpus) == 5
        for spec in corpus:
            assert spec.period in PERIODS
            assert not any(spec.schedule[1:])
            assert is_fixed_point_instance(PftSpec.sft(spec.alphabet, spec.forbidden))

    def test_seeded(self):
        config = VerificationConfig(sft_corpus_size=4, random_seed=7)
        assert binary_corpus(config) == binary_corpus(config)

    def test_ternary_corpus(self):
        corpus = ternary_corpus(VerificationConfig(ternary_corpus_size=3))
        assert len(corpus) == 3
        assert all(spec.q == 3 and len(spec.forbidden) <= 2 for spec in corpus)

    def test_fixed_point_instance(self, golden_mean):
        assert is_fixed_point_instance(golden_mean)
        # no constant word survives
        assert not is_fixed_point_instance(PftSpec.from_strings([["00", "11"]]))


class TestSuites:
    @pytest.mark.parametrize("name", list(SUITES))
    def test_suite_passes(self, name, small_config):
        table = run_suites([name], small_config)
        assert list(table.columns) == ['suite', 'check', 'passed', 'detail']
        assert set(table['suite']) == {name}
        assert table['passed'].all(), table[~table['passed']].to_string()

    def test_charpoly_for_11(self, small_config):
        table = run_suites(["charpoly"], small_config)
        row = table[table['check'] == "f'=11"].iloc[0]
        assert row['passed']

    def test_unknown_suite(self):
        with pytest.raises(ValueError, match="Unknown suites"):
            run_suites(["nope"])
