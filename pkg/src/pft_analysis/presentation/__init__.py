"""Presentation Package

Labeled graphs and the phased de Bruijn construction that presents a
periodic-finite-type shift:
- LabeledGraph / StateTag value types with DOT and networkx export
- Full phased graph, forbidden-state removal and essential trimming
- The subgraph presenting the underlying shift of finite type
"""

from .graph import StateTag, LabeledGraph, Edge, random_path
from .ms import (
    build_phased_full,
    remove_forbidden,
    trim_essential,
    build_ms,
    build_subgraph_h,
    debruijn_presentation,
    terminal_suffix_holds,
)

__all__ = [
    # Graph types
    "StateTag",
    "LabeledGraph",
    "Edge",
    "random_path",

    # Construction
    "build_phased_full",
    "remove_forbidden",
    "trim_essential",
    "build_ms",
    "build_subgraph_h",
    "debruijn_presentation",
    "terminal_suffix_holds",
]
