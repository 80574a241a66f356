"""Shared fixtures: small specs, their presentations and spec files."""

import sys
from pathlib import Path

import pytest

# Ensure src/ is on path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from pft_analysis.core import Alphabet, PftSpec  # noqa: E402
from pft_analysis.cli.spec_file import save_spec_file  # noqa: E402
from pft_analysis.presentation import build_ms  # noqa: E402


@pytest.fixture
def binary():
    return Alphabet.binary()


@pytest.fixture
def golden_mean():
    """The shift of finite type forbidding 11."""
    return PftSpec.from_strings([["11"]])


@pytest.fixture
def even_11():
    """11 forbidden at even positions only."""
    return PftSpec.from_strings([["11"], []])


@pytest.fixture
def even_11_graph(even_11):
    return build_ms(even_11)


@pytest.fixture
def spec_file(tmp_path):
    """Write a spec to a YAML file and return its path."""
    def write(spec, name="spec.yaml"):
        path = tmp_path / name
        save_spec_file(spec, path)
        return str(path)
    return write
