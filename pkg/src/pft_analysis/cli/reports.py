"""Analysis reports and their text/JSON rendering."""

import json
import logging
import math
from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional

from ..config import DEFAULT_CONFIG, PftConfig
from ..core.normalize import normalize_pft
from ..core.spec import PftSpec
from ..errors import AperiodicEmptyError
from ..graphs.components import is_irreducible, shift_is_irreducible
from ..graphs.period import graph_period
from ..periods.descriptive import period_triple
from ..presentation.ms import build_ms
from ..spectral.entropy import sft_subgraph_entropy

logger = logging.getLogger(__name__)

FORMATS = ('text', 'json')


@dataclass
class AnalysisReport:
    """Everything ``pft analyze`` reports about one spec.

    Every field is computed from the spec and the configured bounds alone.
    """
    spec: str
    word_length: int
    forbidden_count: int
    states: int
    edges: int
    deterministic: bool
    graph_irreducible: bool
    shift_irreducible: bool
    per: Optional[int]
    entropy: float
    perron_root: float
    char_poly: str
    h_entropy: float
    exact: bool
    empty: bool
    periods: Optional[Dict[str, Any]] = None

    def to_dict(self) -> dict:
        return asdict(self)


def analyze_spec(spec: PftSpec, config: Optional[PftConfig] = None,
                 with_periods: bool = False) -> AnalysisReport:
    """Irreducibility, period, entropy and characteristic polynomial of a spec.

    Args:
        spec: Any spec
        config: Bounds and tolerances
        with_periods: Also run the three period searches

    Returns:
        AnalysisReport
    """
    config = config or DEFAULT_CONFIG
    normal = normalize_pft(spec)
    graph = build_ms(normal)
    try:
        per = graph_period(graph).per_graph
    except AperiodicEmptyError:
        per = None
    shift_irreducible, _ = shift_is_irreducible(graph)
    gx, h = sft_subgraph_entropy(normal, config.spectral)
    periods = period_triple(spec, config).to_dict() if with_periods else None
    return AnalysisReport(
        spec=spec.describe(),
        word_length=normal.word_length,
        forbidden_count=len(normal.forbidden),
        states=graph.num_states,
        edges=graph.num_edges,
        deterministic=graph.is_deterministic(),
        graph_irreducible=is_irreducible(graph),
        shift_irreducible=shift_irreducible,
        per=per,
        entropy=gx.entropy_bits,
        perron_root=gx.perron_root,
        char_poly=str(gx.char_poly) if gx.char_poly is not None else "skipped",
        h_entropy=h.entropy_bits,
        exact=gx.exact and h.exact,
        empty=gx.empty,
        periods=periods,
    )


def _jsonable(value):
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _flatten(data: dict, prefix: str = "") -> Dict[str, Any]:
    flat = {}
    for key, value in data.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, f"{name}."))
        else:
            flat[name] = value
    return flat


def _format_value(value) -> str:
    if isinstance(value, float):
        return "-inf" if value == float('-inf') else f"{value:.12g}"
    if value is None:
        return "-"
    return str(value)


def render(data: dict, fmt: str = 'text') -> str:
    """Render a flat or nested mapping as a key/value table or as JSON.

    Args:
        data: Mapping to render
        fmt: ``text`` or ``json``

    Returns:
        Text ending in a newline
    """
    if fmt == 'json':
        return json.dumps(_jsonable(data), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    if fmt != 'text':
        raise ValueError(f"Unknown output format {fmt!r}; expected one of {FORMATS}")
    import pandas as pd

    flat = _flatten(data)
    table = pd.DataFrame({'quantity': list(flat), 'value': [_format_value(v) for v in flat.values()]})
    return table.to_string(index=False) + "\n"


__all__ = ["AnalysisReport", "analyze_spec", "render", "FORMATS"]
