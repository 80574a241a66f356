"""Tests for spec documents."""

import pytest

from pft_analysis.cli import format_spec_document, load_spec_file, parse_spec_document, save_spec_file
from pft_analysis.core import PftSpec
from pft_analysis.errors import SpecFileError

EVEN_11 = """\
period: 2
forbidden:
- ['11']
- []
"""


class TestParse:
    def test_basic(self, even_11):
        assert parse_spec_document(EVEN_11) == even_11

    def test_unquoted_words_stay_strings(self):
        spec = parse_spec_document("period: 1\nforbidden:\n- [0011, 1]\n")
        assert spec.forbidden == {(0, 0, 1, 1), (1,)}

    def test_null_phase(self, even_11):
        assert parse_spec_document("period: 2\nforbidden:\n- ['11']\n-\n") == even_11

    def test_custom_alphabet(self):
        spec = parse_spec_document("alphabet: [a, b, c]\nperiod: 1\nforbidden:\n- [ab, cc]\n")
        assert spec.q == 3
        assert spec.forbidden == {(0, 1), (2, 2)}

    @pytest.mark.parametrize("text, line", [
        ("period: 1\nforbidden:\n- ['12']\n", 3),
        ("period: 2\nforbidden:\n- ['11']\n", 3),
        ("period: 1\nforbidden:\n- ['']\n", 3),
        ("period: 0\nforbidden: []\n", 1),
        ("period: 1\nforbiden:\n- []\n", 2),
        ("period: 1\nperiod: 1\nforbidden:\n- []\n", 2),
    ])
    def test_error_lines(self, text, line):
        with pytest.raises(SpecFileError) as info:
            parse_spec_document(text)
        assert info.value.line == line
        assert info.value.code == "parse-error"

    def test_yaml_syntax_error(self):
        with pytest.raises(SpecFileError) as info:
            parse_spec_document("period: 1\nforbidden: [[11\n")
        assert info.value.line is not None
        assert str(info.value).startswith(f"line {info.value.line},")

    def test_missing_period(self):
        with pytest.raises(SpecFileError, match="missing key 'period'"):
            parse_spec_document("forbidden:\n- []\n")

    def test_empty_document(self):
        with pytest.raises(SpecFileError):
            parse_spec_document("")

    def test_not_a_mapping(self):
        with pytest.raises(SpecFileError, match="mapping"):
            parse_spec_document("- 11\n")


class TestWrite:
    def test_canonical_form(self, even_11):
        assert format_spec_document(even_11) == (
            "alphabet:\n- '0'\n- '1'\nperiod: 2\nforbidden:\n- - '11'\n- []\n"
        )

    def test_round_trip(self, tmp_path):
        spec = PftSpec.from_strings([["1", "00"], [], ["010"]])
        path = tmp_path / "nested" / "spec.yaml"
        save_spec_file(spec, path)
        assert load_spec_file(path) == spec

    def test_missing_file(self, tmp_path):
        with pytest.raises(SpecFileError, match="cannot read"):
            load_spec_file(tmp_path / "absent.yaml")
