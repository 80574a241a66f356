"""Sequential periods: smallest periods of periodic points.

A periodic point ``(v)^∞`` has ``p = |v|`` as a period whether or not ``v``
is primitive. Membership is invariant under rotation, so only necklace
representatives of each length are tried.
"""

import logging
from typing import FrozenSet, Iterator, List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from ..config import DEFAULT_CONFIG, SearchConfig
from ..core.membership import periodic_membership
from ..core.normalize import normalize_pft
from ..core.spec import PftSpec
from ..core.words import PeriodicWord, Word, encode_word, necklaces
from ..presentation.ms import build_ms
from .data_structures import SeqPeriodResult

logger = logging.getLogger(__name__)


def _prepared(spec: PftSpec) -> Tuple[PftSpec, FrozenSet[int]]:
    normal = normalize_pft(spec)
    codes = frozenset(encode_word(f, normal.q) for f in normal.forbidden)
    return normal, codes


def member_blocks(spec: PftSpec, p: int,
                  prepared: Optional[Tuple[PftSpec, FrozenSet[int]]] = None) -> Iterator[Word]:
    """Necklaces ``v`` of length ``p`` with ``(v)^∞`` in the shift, in lexicographic order."""
    normal, codes = prepared or _prepared(spec)
    for block in necklaces(normal.q, p):
        if periodic_membership(normal, PeriodicWord(block), codes):
            yield block


def t_seq(spec: PftSpec, max_period: Optional[int] = None, verbose: bool = False,
          config: Optional[SearchConfig] = None) -> SeqPeriodResult:
    """Smallest ``p <= max_period`` that is a period of some point of the shift.

    Args:
        spec: Any spec
        max_period: Search bound (defaults to the configured bound)
        verbose: Show a progress bar

    Returns:
        Result with the least necklace of that length as witness, or an
        unknown value when nothing is found up to the bound
    """
    config = config or DEFAULT_CONFIG.search
    max_period = max_period or config.max_period
    prepared = _prepared(spec)
    for p in tqdm(range(1, max_period + 1), desc="Sequential period", disable=not verbose):
        block = next(member_blocks(spec, p, prepared), None)
        if block is not None:
            logger.info(f"T_seq of {spec} is {p}")
            return SeqPeriodResult(p, max_period, PeriodicWord(block))
    logger.info(f"No periodic point of {spec} with period <= {max_period}")
    return SeqPeriodResult(None, max_period)


def realized_periods(spec: PftSpec, max_period: Optional[int] = None,
                     verbose: bool = False) -> List[int]:
    """All ``p <= max_period`` that are a period of some point of the shift."""
    max_period = max_period or DEFAULT_CONFIG.search.max_period
    prepared = _prepared(spec)
    periods = [p for p in tqdm(range(1, max_period + 1), desc="Realized periods",
                               disable=not verbose)
               if next(member_blocks(spec, p, prepared), None) is not None]
    logger.debug(f"Realized periods of {spec} up to {max_period}: {periods}")
    return periods


def _label_map(table: np.ndarray, block: Word) -> np.ndarray:
    """Partial map ``s -> end of the path from s labeled block`` (-1 if none)."""
    image = np.arange(table.shape[0])
    for a in block:
        valid = image >= 0
        image = np.where(valid, table[np.where(valid, image, 0), a], -1)
    return image


def _has_cycle(image: np.ndarray) -> bool:
    """True iff the partial map has a periodic state."""
    states = np.unique(image[image >= 0])
    for _ in range(image.shape[0]):
        if states.size == 0:
            return False
        nxt = image[states]
        states = np.unique(nxt[nxt >= 0])
    return states.size > 0


def t_seq_via_cycles(spec: PftSpec, max_cycle: Optional[int] = None,
                     config: Optional[SearchConfig] = None) -> SeqPeriodResult:
    """Sequential period read off the cycles of the presentation.

    ``(v)^∞`` is a point of the shift exactly when the presentation has a
    cycle labeled by a power of ``v``, i.e. when the partial map of states
    induced by reading ``v`` has a periodic state. Labels ``v`` are tried by
    length ``p <= max_cycle``.

    This equals the least primitive period over all cycle labels: a cycle
    labeled ``u`` with primitive root ``v`` makes the map of ``v`` periodic,
    and a periodic state of the map of ``v`` closes a cycle labeled ``v^m``.
    The first hit comes at the smallest such ``|v|``, so that ``v`` is primitive.
    """
    config = config or DEFAULT_CONFIG.search
    max_cycle = max_cycle or config.max_cycle
    graph = build_ms(spec)
    if graph.is_empty:
        logger.warning(f"No cycles: the shift of {spec} is empty")
        return SeqPeriodResult(None, max_cycle, method="cycles")
    table = graph.transition_table()
    for p in range(1, max_cycle + 1):
        for block in necklaces(graph.alphabet.size, p):
            if _has_cycle(_label_map(table, block)):
                return SeqPeriodResult(p, max_cycle, PeriodicWord(block), method="cycles")
    return SeqPeriodResult(None, max_cycle, method="cycles")


__all__ = ["member_blocks", "t_seq", "realized_periods", "t_seq_via_cycles"]
