"""Tests for the ``pft`` command-line tool."""

import json

from pft_analysis.cli import main, parse_spec_document
from pft_analysis.core import Alphabet, PftSpec
from pft_analysis.families import xk_spec


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSpecCommands:
    def test_normalize(self, capsys, spec_file):
        path = spec_file(PftSpec.from_strings([[], ["1"]]))
        code, out, _ = run(capsys, "normalize", path)
        assert code == 0
        assert parse_spec_document(out) == PftSpec.from_strings([["01", "11"], []])

    def test_build(self, capsys, spec_file, even_11):
        code, out, _ = run(capsys, "build", spec_file(even_11))
        assert code == 0
        assert out.count("->") == 12

    def test_build_to_file(self, capsys, spec_file, even_11, tmp_path):
        dot = tmp_path / "out" / "g.dot"
        code, out, _ = run(capsys, "--format", "json", "build", spec_file(even_11), "--dot", str(dot))
        assert code == 0
        assert json.loads(out) == {'states': 7, 'edges': 12, 'dot': str(dot)}
        assert dot.read_text().startswith("digraph")

    def test_analyze(self, capsys, spec_file, even_11):
        code, out, _ = run(capsys, "--format", "json", "analyze", spec_file(even_11))
        data = json.loads(out)
        assert code == 0
        assert (data['states'], data['edges'], data['per']) == (7, 12, 2)
        assert data['shift_irreducible']
        assert data['h_entropy'] <= data['entropy']
        assert data['periods'] is None

    def test_analyze_text(self, capsys, spec_file, golden_mean):
        code, out, _ = run(capsys, "analyze", spec_file(golden_mean))
        assert code == 0
        assert "t^3 - t^2 - t" in out

    def test_empty_shift_entropy(self, capsys, spec_file):
        code, out, _ = run(capsys, "--format", "json", "analyze",
                           spec_file(PftSpec.from_strings([["0", "1"]])))
        data = json.loads(out)
        assert code == 0
        assert data['empty']
        assert data['entropy'] == "-inf"

    def test_periods(self, capsys, spec_file):
        path = spec_file(xk_spec(2))
        code, out, _ = run(capsys, "--format", "json", "periods", path,
                           "--max-period", "8", "--max-len", "4")
        data = json.loads(out)
        assert code == 0
        assert (data['t_seq'], data['t_graph'], data['t_desc']) == ("2", "2", "2")
        assert data['bounds']['max_len'] == 4
        assert data['divisibility']['consistent'] is True

    def test_periods_rejects_zero_bound(self, capsys, spec_file, even_11):
        code, _, err = run(capsys, "periods", spec_file(even_11), "--max-len", "0")
        assert code == 1
        assert "invalid-input" in err


class TestFamilies:
    def test_xk(self, capsys):
        code, out, _ = run(capsys, "family", "xk", "--k", "2")
        assert code == 0
        assert parse_spec_document(out) == xk_spec(2)

    def test_thm8_beyond_desk_scale(self, capsys):
        code, _, err = run(capsys, "family", "thm8", "--k", "4")
        assert code == 1
        assert "desk-scale-exceeded" in err


class TestEqual:
    def test_same_shift(self, capsys, spec_file, even_11):
        a = spec_file(even_11, "a.yaml")
        b = spec_file(PftSpec.from_strings([[], ["11"]]), "b.yaml")
        code, out, _ = run(capsys, "--format", "json", "equal", a, b)
        assert code == 0
        assert json.loads(out) == {'equal': True}

    def test_different_shifts(self, capsys, spec_file, even_11, golden_mean):
        a = spec_file(even_11, "a.yaml")
        b = spec_file(golden_mean, "b.yaml")
        code, out, _ = run(capsys, "--format", "json", "equal", a, b)
        data = json.loads(out)
        assert code == 1
        assert data['separating_block'] == "11"
        assert data['block_only_in'] == "A"
        assert data['periodic_witness'] == "(0011)^inf"
        assert data['witness_only_in'] == "A"

    def test_different_alphabets(self, capsys, spec_file, even_11):
        ternary = PftSpec.from_strings([["11"]], Alphabet(3))
        code, _, err = run(capsys, "equal", spec_file(even_11, "a.yaml"), spec_file(ternary, "b.yaml"))
        assert code == 1
        assert "Alphabets differ" in err


class TestErrors:
    def test_unknown_command(self, capsys):
        assert run(capsys, "bogus")[0] == 2

    def test_help(self, capsys):
        assert run(capsys, "--help")[0] == 0

    def test_parse_error(self, capsys, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text("period: 2\nforbidden:\n- ['11']\n")
        code, _, err = run(capsys, "analyze", str(path))
        assert code == 2
        assert err.startswith("error: parse-error: line 3")

    def test_missing_config(self, capsys, tmp_path, spec_file, even_11):
        code, _, err = run(capsys, "--config", str(tmp_path / "none.yaml"), "analyze", spec_file(even_11))
        assert code == 2
        assert "config" in err


class TestVerify:
    def test_list(self, capsys):
        code, out, _ = run(capsys, "verify", "--list")
        assert code == 0
        assert out.splitlines()[0].startswith("ms\t")

    def test_single_suite(self, capsys, tmp_path):
        csv = tmp_path / "results.csv"
        code, out, _ = run(capsys, "verify", "--suite", "ms", "--csv", str(csv))
        assert code == 0
        assert out.rstrip().endswith("checks passed")
        assert csv.exists()

    def test_unknown_suite(self, capsys):
        assert run(capsys, "verify", "--suite", "nonsense")[0] == 2
