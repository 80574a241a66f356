"""Command-line Package

The ``pft`` tool, the shift-spec document format and report rendering.
"""

from .main import main, build_parser
from .reports import AnalysisReport, analyze_spec, render
from .spec_file import load_spec_file, save_spec_file, parse_spec_document, format_spec_document

__all__ = [
    # Entry point
    "main",
    "build_parser",

    # Reports
    "AnalysisReport",
    "analyze_spec",
    "render",

    # Spec documents
    "load_spec_file",
    "save_spec_file",
    "parse_spec_document",
    "format_spec_document",
]
