"""Descriptive periods: the least period of any forbidden-word description.

Every description with period ``T*`` has a normal form whose words all sit
at phase 0 and share one length ``ℓ*``, so the search is over phase-0 word
sets ``F ⊆ Σ^ℓ*``:

- ``T* = 1``: the shift is of finite type with memory ``ℓ*`` exactly when it
  equals the shift forbidding ``Σ^ℓ* ∖ B_ℓ*(X)``.
- ``T* >= 2``: the shift ``X_F`` contains ``X`` iff no point of ``X`` has
  occurrences of words of ``F`` at every residue mod ``T*``. Words that never
  occur can always be added. The occurring words that are allowed on their
  own are searched exhaustively when there are at most ``subset_budget`` of
  them; containment is closed under subsets, so only maximal sets need the
  equality test.

Results are three-valued per ``T*``: achievable, not found up to the length
bound, or inconclusive because the candidate set was too large.
"""

import logging
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

import networkx as nx
from tqdm import tqdm

from ..config import DEFAULT_CONFIG, PftConfig
from ..core.normalize import normalize_pft
from ..core.spec import PftSpec
from ..core.words import all_words, decode_word
from ..language.blocks import blocks_of_length
from ..language.equality import shifts_equal
from ..presentation.graph import LabeledGraph
from ..presentation.ms import build_ms
from .data_structures import (
    ACHIEVABLE, INCONCLUSIVE, NOT_FOUND,
    ConjectureReport, DescRow, DescVerdict, PeriodTriple,
)
from .sequential import t_seq

logger = logging.getLogger(__name__)


def sft_row(graph: LabeledGraph, max_len: int) -> Tuple[Optional[int], Optional[PftSpec]]:
    """Smallest ``ℓ* <= max_len`` making the shift an SFT with words of length ``ℓ*``."""
    alphabet = graph.alphabet
    for length in range(1, max_len + 1):
        blocks = blocks_of_length(graph, length).words
        forbidden = [w for w in all_words(alphabet.size, length) if w not in blocks]
        candidate = PftSpec.sft(alphabet, forbidden)
        if shifts_equal(build_ms(candidate), graph):
            return length, candidate
    return None, None


class OccurrenceGraph:
    """Windows of length ``ℓ*`` along paths of a presentation, with positions mod ``T*``.

    Nodes are ``(state, window code, position mod T*)`` where the window is the
    label of some path of length ``ℓ*`` ending at the state. A word occurs at
    residue ``r`` on a path through a node whose window is that word and whose
    position is ``r``. A path can collect the residues of everything in a
    strongly connected component, so containment questions reduce to the
    condensation DAG.
    """

    def __init__(self, graph: LabeledGraph, t_star: int, length: int):
        self.t_star = t_star
        self.length = length
        q = graph.alphabet.size
        size = q ** length

        windows: Set[Tuple[int, int]] = {(s, 0) for s in range(graph.num_states)}
        for _ in range(length):
            windows = {(v, (code * q + a) % size)
                       for s, code in windows for a, v in graph.out_edges[s]}
        self.codes = frozenset(code for _, code in windows)

        product = nx.DiGraph()
        for s, code in windows:
            for pos in range(t_star):
                product.add_node((s, code, pos))
                for a, v in graph.out_edges[s]:
                    product.add_edge((s, code, pos), (v, (code * q + a) % size, (pos + 1) % t_star))
        self.dag = nx.condensation(product)
        self.order = list(reversed(list(nx.topological_sort(self.dag))))
        # residues per window code inside each component
        self.component_marks: Dict[int, Dict[int, int]] = {}
        for component, data in self.dag.nodes(data=True):
            marks: Dict[int, int] = {}
            for _, code, pos in data['members']:
                marks[code] = marks.get(code, 0) | (1 << pos)
            self.component_marks[component] = marks
        logger.debug(f"Occurrence graph T*={t_star}, length {length}: {len(windows)} windows, "
                     f"{self.dag.number_of_nodes()} components")

    def covers_all_residues(self, codes: FrozenSet[int]) -> bool:
        """True iff some path has occurrences of ``codes`` at every residue."""
        full = (1 << self.t_star) - 1
        reachable: Dict[int, Set[int]] = {}
        for component in self.order:
            own = 0
            for code, mark in self.component_marks[component].items():
                if code in codes:
                    own |= mark
            masks = {own}
            for successor in self.dag.successors(component):
                masks.update(own | m for m in reachable[successor])
            if full in masks:
                return True
            reachable[component] = masks
        return False


class CandidateSearch:
    """Phase-0 description search for one ``(T*, ℓ*)``."""

    def __init__(self, graph: LabeledGraph, t_star: int, length: int):
        self.graph = graph
        self.alphabet = graph.alphabet
        self.t_star = t_star
        self.length = length
        q = self.alphabet.size
        self.occurrences = OccurrenceGraph(graph, t_star, length)
        occurring = self.occurrences.codes
        self._feasible: Dict[FrozenSet[int], bool] = {}
        self.never = frozenset(decode_word(c, length, q) for c in range(q ** length)
                               if c not in occurring)
        self.candidates: List[int] = [c for c in sorted(occurring) if self.feasible(frozenset([c]))]

    def feasible(self, chosen: FrozenSet[int]) -> bool:
        """``X ⊆ X_S`` for ``S = chosen ∪ never``."""
        if chosen not in self._feasible:
            self._feasible[chosen] = not self.occurrences.covers_all_residues(chosen)
        return self._feasible[chosen]

    def spec_for(self, chosen: FrozenSet[int]) -> PftSpec:
        q = self.alphabet.size
        phase0 = frozenset(decode_word(c, self.length, q) for c in chosen) | self.never
        return PftSpec(self.alphabet, self.t_star,
                       (phase0,) + (frozenset(),) * (self.t_star - 1))

    def run(self) -> Optional[PftSpec]:
        """First maximal feasible set (in search order) whose shift equals ``X``."""
        candidates = self.candidates

        def dfs(chosen: FrozenSet[int], start: int) -> Optional[PftSpec]:
            for i in range(start, len(candidates)):
                extended = chosen | {candidates[i]}
                if self.feasible(extended):
                    found = dfs(extended, i + 1)
                    if found is not None:
                        return found
            if all(c in chosen or not self.feasible(chosen | {c}) for c in candidates):
                spec = self.spec_for(chosen)
                if shifts_equal(build_ms(spec), self.graph):
                    return spec
            return None

        return dfs(frozenset(), 0)


def t_desc_search(spec: PftSpec, max_T: Optional[int] = None, max_len: Optional[int] = None,
                  subset_budget: Optional[int] = None,
                  config: Optional[PftConfig] = None) -> DescVerdict:
    """Search for the smallest period of a description of the shift.

    Args:
        spec: Any spec
        max_T: Largest ``T*`` tried (defaults to the configured bound, else ``T``)
        max_len: Largest normal-form word length ``ℓ*`` tried
        subset_budget: Largest occurring-candidate set searched exhaustively

    Returns:
        Verdict with one row per ``T*`` and the ``T* = 1`` properness verdict
    """
    config = config or DEFAULT_CONFIG
    search = config.search
    max_len = max_len or search.max_len
    subset_budget = subset_budget or search.subset_budget
    normal = normalize_pft(spec)
    max_T = max_T or search.max_desc_period or normal.period
    graph = build_ms(normal)
    verdict = DescVerdict(None, max_len=max_len, subset_budget=subset_budget)

    length, sft = sft_row(graph, max_len)
    if length is not None:
        verdict.sft_length = length
        verdict.t_desc = 1
        verdict.rows.append(DescRow(1, ACHIEVABLE, length, max_len, sft, "shift of finite type"))
        logger.info(f"{spec} is an SFT with forbidden words of length {length}")
        return verdict
    verdict.proper_up_to = max_len
    verdict.rows.append(DescRow(1, NOT_FOUND, None, max_len, None,
                                f"no SFT description up to length {max_len}"))

    for t_star in tqdm(range(2, max_T + 1), desc="Descriptive period", disable=not config.verbose):
        if t_star % normal.period == 0:
            row = DescRow(t_star, ACHIEVABLE, normal.word_length, max_len,
                          _repeat_schedule(normal, t_star), f"multiple of T={normal.period}")
        else:
            row = _search_row(graph, t_star, max_len, subset_budget)
        verdict.rows.append(row)
        logger.debug(f"T*={t_star}: {row.verdict} ({row.reason})")
        if row.verdict == ACHIEVABLE:
            verdict.t_desc = t_star
            break
    logger.info(f"T_desc of {spec}: {verdict.format()}, {verdict.properness()}")
    return verdict


def _repeat_schedule(normal: PftSpec, t_star: int) -> PftSpec:
    """The given description unrolled to a multiple ``t_star`` of its period."""
    phases = tuple(normal.schedule[j % normal.period] for j in range(t_star))
    return PftSpec(normal.alphabet, t_star, phases)


def _search_row(graph: LabeledGraph, t_star: int, max_len: int, subset_budget: int) -> DescRow:
    inconclusive_at: List[int] = []
    largest = 0
    for length in range(1, max_len + 1):
        search = CandidateSearch(graph, t_star, length)
        size = len(search.candidates)
        largest = max(largest, size)
        if size > subset_budget:
            inconclusive_at.append(length)
            continue
        found = search.run()
        if found is not None:
            return DescRow(t_star, ACHIEVABLE, length, max_len, found,
                           f"{size} occurring candidates", largest)
    if inconclusive_at:
        return DescRow(t_star, INCONCLUSIVE, None, max_len, None,
                       f"candidate set over budget {subset_budget} at lengths {inconclusive_at}",
                       largest)
    return DescRow(t_star, NOT_FOUND, None, max_len, None,
                   f"no description up to length {max_len}", largest)


def divisibility_conjecture_check(spec: PftSpec, triple: Optional[PeriodTriple] = None,
                                  config: Optional[PftConfig] = None) -> ConjectureReport:
    """Compare ``T_desc`` with the bounds on ``T_graph``; only reports, never asserts."""
    triple = triple or period_triple(spec, config)
    bounds = triple.t_graph
    report = ConjectureReport(
        triple.t_desc.t_desc if triple.t_desc.conclusive else None,
        bounds.lower if bounds else None,
        bounds.upper if bounds else None,
    )
    if not report.resolved:
        logger.info(f"Divisibility for {spec} unresolved within the bounds")
    elif not report.consistent:
        logger.warning(f"T_desc={report.t_desc} divides no candidate T_graph in "
                       f"[{report.t_graph_lower}, {report.t_graph_upper}] for {spec}")
    return report


def period_triple(spec: PftSpec, config: Optional[PftConfig] = None) -> PeriodTriple:
    """Sequential, graphical and descriptive periods under the configured bounds."""
    from ..errors import TGraphUndefinedError
    from .graphical import t_graph_bounds

    config = config or DEFAULT_CONFIG
    search = config.search
    seq = t_seq(spec, search.max_period, verbose=config.verbose, config=search)
    note = ""
    try:
        graph_bounds = t_graph_bounds(spec, search.max_period, config)
    except TGraphUndefinedError as e:
        graph_bounds, note = None, f"undefined ({e.code})"
    desc = t_desc_search(spec, config=config)
    bounds = {
        'max_period': search.max_period,
        'max_len': search.max_len,
        'subset_budget': search.subset_budget,
        'max_desc_period': search.max_desc_period or spec.period,
    }
    return PeriodTriple(seq, graph_bounds, desc, bounds, note)


__all__ = [
    "sft_row",
    "OccurrenceGraph",
    "CandidateSearch",
    "t_desc_search",
    "divisibility_conjecture_check",
    "period_triple",
]
