"""Verification suites run by ``pft verify``.

Each suite checks one group of results on concrete instances and returns one
:class:`CheckResult` per check. Checks over a corpus are aggregated into a
single row whose detail names the failing instances.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Optional, Sequence

import numpy as np
from tqdm import tqdm

from ..config import DEFAULT_CONFIG, PftConfig, VerificationConfig
from ..core.membership import periodic_membership
from ..core.normalize import normalize_pft
from ..core.spec import PftSpec
from ..core.words import Alphabet, all_words
from ..errors import ArrangementInapplicableError, PftError
from ..families.psi import psi_power, psi_power_iterated, psi_preimages
from ..families.theorem8 import theorem8_spec
from ..families.xk import (
    odd_parity_filter, predicted_t_seq, xk_forbidden, xk_forbidden_recursive,
    xk_period_witness, xk_reducibility_witness, xk_spec,
)
from ..graphs.components import is_irreducible, shift_is_irreducible
from ..graphs.period import graph_period, period_by_cycle_enumeration
from ..language.blocks import blocks_agree_up_to, blocks_of_length
from ..language.equality import shifts_equal
from ..periods.data_structures import DescVerdict
from ..periods.descriptive import t_desc_search
from ..periods.graphical import graph_at_least_seq_check, prop1_necessary_check, t_graph_bounds
from ..periods.sequential import realized_periods, t_seq, t_seq_via_cycles
from ..presentation.graph import LabeledGraph, random_path
from ..presentation.ms import build_ms, build_subgraph_h, debruijn_presentation, terminal_suffix_holds
from ..spectral.arrangement import theorem3_identity
from ..spectral.entropy import entropy, sft_subgraph_entropy
from ..spectral.polynomial import char_poly, char_poly_at
from ..utils.common import Timer
from .corpus import binary_corpus, ternary_corpus

logger = logging.getLogger(__name__)

GOLDEN_MEAN_ENTROPY = math.log2((1 + math.sqrt(5)) / 2)


@dataclass
class CheckResult:
    """Outcome of one check."""
    suite: str
    check: str
    passed: bool
    detail: str = ""


def _aggregate(suite: str, check: str, items: Iterable, predicate: Callable,
               describe: Callable = str) -> CheckResult:
    items = list(items)
    failures = [describe(item) for item in items if not predicate(item)]
    detail = f"{len(items) - len(failures)}/{len(items)} hold"
    if failures:
        detail += "; failing: " + "; ".join(failures[:5])
    return CheckResult(suite, check, not failures, detail)


def _binary(*phases: Sequence[str]) -> PftSpec:
    return PftSpec.from_strings([list(p) for p in phases])


def _doubled(spec: PftSpec) -> PftSpec:
    """The same shift described with twice the period."""
    return PftSpec(spec.alphabet, 2 * spec.period, spec.schedule * 2)


@lru_cache(maxsize=None)
def _corpus(seed: int, size: int) -> tuple:
    return tuple(binary_corpus(VerificationConfig(random_seed=seed, sft_corpus_size=size)))


def _binary_corpus(config: PftConfig) -> Sequence[PftSpec]:
    v = config.verification
    return _corpus(v.random_seed, v.sft_corpus_size)


@lru_cache(maxsize=None)
def _t_desc(spec: PftSpec, max_T: int, max_len: int, budget: int) -> DescVerdict:
    return t_desc_search(spec, max_T, max_len, budget)


def _desc(spec: PftSpec, config: PftConfig, max_T: Optional[int] = None) -> DescVerdict:
    search = config.search
    return _t_desc(spec, max_T or spec.period, search.max_len, search.subset_budget)


# -----------------------------------------------------------------------------
# Presentations and irreducibility
# -----------------------------------------------------------------------------

def ms_suite(config: PftConfig) -> List[CheckResult]:
    """Presentation of ``({11}, ∅)`` and the terminal-state property on random paths."""
    suite = "ms"
    graph = build_ms(_binary(["11"], []))
    results = [
        CheckResult(suite, "7 states", graph.num_states == 7, graph.summary()),
        CheckResult(suite, "12 edges", graph.num_edges == 12, graph.summary()),
        CheckResult(suite, "deterministic", graph.is_deterministic()),
        CheckResult(suite, "irreducible", is_irreducible(graph)),
        CheckResult(suite, "per(G) = 2", graph_period(graph).per_graph == 2,
                    f"per(G) = {graph_period(graph).per_graph}"),
    ]
    rng = np.random.default_rng(config.verification.random_seed)
    paths = []
    for _ in range(config.verification.random_paths):
        length = int(rng.integers(graph.word_length, 4 * graph.word_length + 8))
        paths.append(random_path(graph, length, rng))
    results.append(_aggregate(suite, "path ends at its last labels", paths,
                              lambda p: terminal_suffix_holds(graph, *p),
                              lambda p: graph.alphabet.format_word(p[1])))
    return results


def irreducibility_suite(config: PftConfig) -> List[CheckResult]:
    """Irreducible SFT with a fixed point gives an irreducible presentation for every T."""
    suite = "irreducibility"
    corpus = _binary_corpus(config)
    ternary = ternary_corpus(config.verification)
    return [
        _aggregate(suite, "fixed point => irreducible presentation", corpus,
                   lambda s: is_irreducible(build_ms(s))),
        _aggregate(suite, "|F'| < q => irreducible shift", ternary,
                   lambda s: shift_is_irreducible(build_ms(s))[0]),
    ]


def subgraph_suite(config: PftConfig) -> List[CheckResult]:
    """The non-forbidden subgraph presents the underlying shift of finite type."""
    suite = "subgraph"
    corpus = _binary_corpus(config)
    return [_aggregate(suite, "H presents Y", corpus,
                       lambda s: shifts_equal(build_subgraph_h(s), debruijn_presentation(s)))]


# -----------------------------------------------------------------------------
# Spectral
# -----------------------------------------------------------------------------

def charpoly_suite(config: PftConfig) -> List[CheckResult]:
    """The characteristic-polynomial identity for every single forbidden word."""
    suite = "charpoly"
    binary = Alphabet.binary()
    results = []
    for length in (2, 3):
        for word in all_words(2, length):
            spec = PftSpec(binary, 2, (frozenset([word]), frozenset()))
            name = f"f'={binary.format_word(word)}"
            try:
                identity = theorem3_identity(spec)
            except ArrangementInapplicableError as e:
                results.append(CheckResult(suite, name, True, f"skipped: {e}"))
                continue
            detail = f"chi_GX = {identity.lhs}"
            if not identity.holds:
                detail += f"; right side = {identity.rhs}"
            if not identity.det_b_matches:
                detail += f"; det B = {identity.det_b}, chi_H = {identity.chi_h}"
            results.append(CheckResult(suite, name, identity.holds and identity.det_b_matches, detail))
    return results


def entropy_suite(config: PftConfig) -> List[CheckResult]:
    suite = "entropy"
    binary = Alphabet.binary()
    golden = entropy(build_ms(PftSpec.sft(binary, [(1, 1)])), config.spectral).entropy_bits
    full = entropy(build_ms(PftSpec.sft(binary, [])), config.spectral).entropy_bits

    def h_below(spec: PftSpec) -> bool:
        gx, h = sft_subgraph_entropy(spec, config.spectral)
        return h.perron_root <= gx.perron_root + 1e-12

    return [
        CheckResult(suite, "golden mean", abs(golden - GOLDEN_MEAN_ENTROPY) < 1e-9, f"{golden:.12f}"),
        CheckResult(suite, "full binary shift", full == 1.0, repr(full)),
        _aggregate(suite, "lambda_H <= lambda_GX", _binary_corpus(config), h_below),
    ]


# -----------------------------------------------------------------------------
# Families
# -----------------------------------------------------------------------------

def families_suite(config: PftConfig) -> List[CheckResult]:
    suite = "families"
    ks = range(1, 13)
    expected = {j: frozenset(f + (f[0],) for f in all_words(2, 2 ** j)) for j in range(3)}

    def fast_paths_agree(n: int) -> bool:
        powers = [m for m in range(1, n) if m & (m - 1) == 0 or (m + 1) & m == 0]
        return all(psi_power(u, m) == psi_power_iterated(u, m)
                   for u in all_words(2, n) for m in powers)

    return [
        _aggregate(suite, "|F_k| = 2^(k-1)", ks, lambda k: len(xk_forbidden(k)) == 2 ** (k - 1),
                   lambda k: f"k={k}"),
        CheckResult(suite, "F_2 = {00,11}", xk_forbidden(2) == {(0, 0), (1, 1)}),
        _aggregate(suite, "F_(2^j+1) = {f f_1}", expected,
                   lambda j: xk_forbidden(2 ** j + 1) == expected[j], lambda j: f"j={j}"),
        _aggregate(suite, "parity criterion = iterated preimages", range(1, 11),
                   lambda k: xk_forbidden(k) == xk_forbidden_recursive(k), lambda k: f"k={k}"),
        _aggregate(suite, "odd weight words not in F_(2^j)", range(4), odd_parity_filter,
                   lambda j: f"j={j}"),
        _aggregate(suite, "psi power fast paths", range(1, 13), fast_paths_agree,
                   lambda n: f"|u|={n}"),
    ]


def xk_suite(config: PftConfig) -> List[CheckResult]:
    suite = "xk"
    graphs = {k: build_ms(xk_spec(k)) for k in range(1, 8)}

    def preimage_identity(k: int) -> bool:
        for n in range(1, 10):
            image = blocks_of_length(graphs[k], n).words
            expected = {u for v in image for u in psi_preimages(v)}
            if blocks_of_length(graphs[k + 1], n + 1).words != expected:
                logger.warning(f"Block preimage identity fails for k={k}, n={n}")
                return False
        return True

    def witness_blocks(j: int) -> bool:
        graph = graphs[2 ** j]
        return xk_reducibility_witness(j, 8) in blocks_of_length(graph, 8)

    results = [
        _aggregate(suite, "B(X_(k+1)) = psi^-1 B(X_k)", range(1, 6), preimage_identity,
                   lambda k: f"k={k}"),
        _aggregate(suite, "irreducible for k <= 6", range(1, 7),
                   lambda k: is_irreducible(graphs[k]), lambda k: f"k={k}"),
        CheckResult(suite, "reducible for k = 7", not is_irreducible(graphs[7]),
                    graphs[7].summary()),
        _aggregate(suite, "single 0^(2^j) sequence is in X_(2^j)", range(3), witness_blocks,
                   lambda j: f"j={j}"),
    ]
    verdicts = {k: _desc(xk_spec(k), config) for k in range(1, 5)}
    expected = f"proper-up-to({config.search.max_len})"
    results.append(_aggregate(suite, f"X_k {expected}", verdicts,
                              lambda k: verdicts[k].properness() == expected,
                              lambda k: f"k={k}: {verdicts[k].properness()}"))
    return results


# -----------------------------------------------------------------------------
# Periods
# -----------------------------------------------------------------------------

def periods_suite(config: PftConfig) -> List[CheckResult]:
    suite = "periods"
    bound = config.search.max_period
    seqs = {k: t_seq(xk_spec(k), bound, config=config.search) for k in range(1, 9)}
    results = [_aggregate(suite, "t_seq(X_k) = 2^(j+1)", seqs,
                          lambda k: seqs[k].value == predicted_t_seq(k),
                          lambda k: f"k={k}: {seqs[k].format()}")]

    def multiples(k: int) -> bool:
        step = predicted_t_seq(k)
        return all(p % step == 0 for p in realized_periods(xk_spec(k), bound))

    results.append(_aggregate(suite, "all periods are multiples", range(2, 9), multiples,
                              lambda k: f"k={k}"))

    excluded = {
        2: [p for p in range(1, 16) if p % 2],
        3: [2, 6, 10, 14],
        5: [4, 12],
    }

    def no_small_period(k: int) -> bool:
        return not set(realized_periods(xk_spec(k), max(excluded[k]))) & set(excluded[k])

    results.append(_aggregate(suite, "no period (2t+1)2^j in X_(2^j+1)", excluded, no_small_period,
                              lambda k: f"k={k}"))

    def witness(k: int) -> bool:
        point = xk_period_witness(k)
        return point.period == predicted_t_seq(k) and bool(periodic_membership(xk_spec(k), point))

    results.append(_aggregate(suite, "period witness lies in X_k", range(1, 9), witness,
                              lambda k: f"k={k}"))
    results.append(_aggregate(suite, "T_graph lower bound >= t_seq", range(1, 7),
                              lambda k: graph_at_least_seq_check(xk_spec(k), config),
                              lambda k: f"k={k}"))
    return results


def desc_suite(config: PftConfig) -> List[CheckResult]:
    suite = "desc"
    expected = f"proper-up-to({config.search.max_len})"
    sft_like = _desc(_binary(["11"], ["11"]), config)
    results = [CheckResult(suite, "({11},{11}) has t_desc 1", sft_like.t_desc == 1,
                           sft_like.properness())]
    proper = []
    for period in (2, 3, 5):
        spec = _binary(["11"], *[[] for _ in range(period - 1)])
        verdict = _desc(spec, config)
        proper.append((spec, verdict))
        ok = verdict.t_desc == period and verdict.properness() == expected
        results.append(CheckResult(suite, f"({{11}},∅..) T={period}", ok,
                                   f"t_desc {verdict.format()}, {verdict.properness()}"))
    for k in range(1, 5):
        spec = xk_spec(k)
        verdict = _desc(spec, config)
        proper.append((spec, verdict))
        results.append(CheckResult(suite, f"X_{k} has t_desc 2", verdict.t_desc == 2,
                                   f"t_desc {verdict.format()}, {verdict.properness()}"))
    results.append(_aggregate(suite, "gcd(per(G), T) != 1 when proper", proper,
                              lambda item: prop1_necessary_check(item[0], item[1], config),
                              lambda item: str(item[0])))
    return results


def thm8_suite(config: PftConfig) -> List[CheckResult]:
    """Sequential period above k while the graphical period stays 2."""
    suite = "thm8"
    k = config.verification.theorem8_k
    spec = theorem8_spec(k, config=config.families)
    results = []
    if k == 2:
        expected = frozenset(Alphabet.binary().parse_word(w) for w in ("0000", "0101", "1010", "1111"))
        results.append(CheckResult(suite, "F = {0000,0101,1010,1111}", spec.forbidden == expected,
                                   spec.format_phase(0)))
    verdict = _desc(spec, config)
    proper = f"proper-up-to({config.search.max_len})"
    results.append(CheckResult(suite, proper, verdict.properness() == proper, verdict.properness()))
    results.append(CheckResult(suite, "irreducible", is_irreducible(build_ms(spec))))
    seq = t_seq(spec, config.search.max_period, config=config.search)
    results.append(CheckResult(suite, f"t_seq >= {k + 1}", seq.found and seq.value >= k + 1,
                               f"t_seq = {seq.format()}"))
    bounds = t_graph_bounds(spec, config=config)
    results.append(CheckResult(suite, "T_graph upper bound = 2", bounds.upper == 2, bounds.format()))
    results.append(CheckResult(suite, "T_graph lower bound divides 2", 2 % bounds.lower == 0,
                               f"lower = {bounds.lower}"))
    return results


# -----------------------------------------------------------------------------
# Cross-checks
# -----------------------------------------------------------------------------

def _oracle_specs(config: PftConfig) -> List[PftSpec]:
    specs = list(_binary_corpus(config))
    specs += [xk_spec(k) for k in range(1, 7)]
    specs += [_binary(["11"], []), _binary(["11"], ["11"]), _binary(["11"], [], [])]
    return specs


def _random_pairs(specs: Sequence[PftSpec], count: int, rng: np.random.Generator):
    pairs = []
    for i in range(count):
        a = specs[int(rng.integers(len(specs)))]
        if i % 2 == 0:
            b = _doubled(a) if i % 4 == 0 else normalize_pft(a, complete=True)
        else:
            b = specs[int(rng.integers(len(specs)))]
        pairs.append((a, b))
    return pairs


def oracles_suite(config: PftConfig) -> List[CheckResult]:
    """Independent computations of the same quantity must agree."""
    suite = "oracles"
    specs = _oracle_specs(config)
    max_cycle = config.search.max_cycle
    limit = config.language.crosscheck_limit

    def seq_agrees(spec: PftSpec) -> bool:
        words = t_seq(spec, max_cycle, config=config.search)
        cycles = t_seq_via_cycles(spec, max_cycle, config=config.search)
        return words.value == cycles.value

    def blocks_agree(pair) -> bool:
        a, b = build_ms(pair[0]), build_ms(pair[1])
        bound = min(max(a.num_states, 1) * max(b.num_states, 1), limit)
        return shifts_equal(a, b) == blocks_agree_up_to(a, b, bound)

    graphs: List[LabeledGraph] = [build_ms(s) for s in specs]

    def poly_agrees(graph: LabeledGraph) -> bool:
        matrix = graph.adjacency_matrix()
        poly = char_poly(matrix)
        return all(poly(t) == char_poly_at(matrix, t) for t in (-2, -1, 0, 1, 2))

    def period_agrees(graph: LabeledGraph) -> bool:
        return graph_period(graph).per_state == period_by_cycle_enumeration(graph)

    rng = np.random.default_rng(config.verification.random_seed)
    pairs = _random_pairs(specs, config.verification.random_pairs, rng)
    return [
        _aggregate(suite, "t_seq = t_seq via cycles", specs, seq_agrees),
        _aggregate(suite, "equality = block comparison", pairs, blocks_agree,
                   lambda p: f"{p[0]} vs {p[1]}"),
        _aggregate(suite, "char poly = fraction-free det", [g for g in graphs if g.num_states <= 16],
                   poly_agrees, lambda g: g.summary()),
        _aggregate(suite, "per = cycle enumeration",
                   [g for g in graphs if 0 < g.num_states <= 12], period_agrees,
                   lambda g: g.summary()),
    ]


SUITES: Dict[str, Callable[[PftConfig], List[CheckResult]]] = {
    'ms': ms_suite,
    'irreducibility': irreducibility_suite,
    'subgraph': subgraph_suite,
    'charpoly': charpoly_suite,
    'entropy': entropy_suite,
    'families': families_suite,
    'xk': xk_suite,
    'periods': periods_suite,
    'desc': desc_suite,
    'thm8': thm8_suite,
    'oracles': oracles_suite,
}


def run_suites(names: Optional[Sequence[str]] = None, config: Optional[PftConfig] = None):
    """Run the named suites (all by default) and collect the results.

    Args:
        names: Suite names from :data:`SUITES`
        config: Bounds, corpus sizes and seed

    Returns:
        DataFrame with columns ``suite``, ``check``, ``passed``, ``detail``
    """
    import pandas as pd

    config = config or DEFAULT_CONFIG
    names = list(names or SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ValueError(f"Unknown suites {unknown}; choose from {list(SUITES)}")

    rows: List[CheckResult] = []
    for name in tqdm(names, desc="Verification", disable=not config.verbose):
        with Timer(f"suite {name}"):
            try:
                results = SUITES[name](config)
            except (PftError, RuntimeError) as e:
                logger.error(f"Suite {name} aborted: {e}")
                results = [CheckResult(name, "suite completed", False, str(e))]
        failed = [r.check for r in results if not r.passed]
        if failed:
            logger.warning(f"Suite {name}: {len(failed)} checks failed: {failed}")
        rows.extend(results)
    return pd.DataFrame([r.__dict__ for r in rows], columns=['suite', 'check', 'passed', 'detail'])


__all__ = ["CheckResult", "SUITES", "run_suites", "GOLDEN_MEAN_ENTROPY"]
