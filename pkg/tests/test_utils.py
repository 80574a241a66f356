"""Tests for logging, timing and output helpers."""

import logging

from pft_analysis.utils import Timer, setup_logging, write_output


def test_setup_logging_does_not_stack_handlers():
    setup_logging()
    package = setup_logging(verbose=True)
    ours = [h for h in package.handlers if isinstance(h, logging.StreamHandler)]
    assert len(ours) == 1
    assert package.level == logging.DEBUG
    setup_logging()


def test_timer_records_elapsed():
    with Timer("noop") as t:
        pass
    assert t.elapsed >= 0.0


def test_write_output_creates_parents(tmp_path):
    out = write_output(tmp_path / "a" / "b" / "g.dot", "digraph G {}\n")
    assert out.read_text() == "digraph G {}\n"
