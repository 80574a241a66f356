"""Graphical periods of irreducible shifts.

The graphical period is the least ``per(G)`` over irreducible presentations
``G``. Only bounds are computed: the upper bound from explicit presentations,
the lower bound from periodic points. A cycle of length ``L`` in any
presentation yields a point with period ``L``, so a number dividing the
period of every point divides every cycle length and hence ``per(G)``.
"""

import logging
from functools import reduce
from math import gcd
from typing import Optional

from ..config import DEFAULT_CONFIG, PftConfig
from ..core.spec import PftSpec
from ..errors import TGraphUndefinedError
from ..graphs.components import shift_is_irreducible
from ..graphs.period import graph_period
from ..language.equality import follower_minimize
from ..presentation.ms import build_ms
from .data_structures import DescVerdict, GraphPeriodBounds
from .sequential import realized_periods, t_seq

logger = logging.getLogger(__name__)


def t_graph_bounds(spec: PftSpec, max_period_evidence: Optional[int] = None,
                   config: Optional[PftConfig] = None) -> GraphPeriodBounds:
    """Lower and upper bounds on the graphical period.

    Args:
        spec: Spec of an irreducible shift
        max_period_evidence: Largest period of the points used for the lower bound

    Returns:
        Bounds; the lower one is conditional on the evidence bound

    Raises:
        TGraphUndefinedError: If the shift is empty or reducible
    """
    config = config or DEFAULT_CONFIG
    bound = max_period_evidence or config.search.max_period
    irreducible, presenting = shift_is_irreducible(build_ms(spec))
    if not irreducible:
        raise TGraphUndefinedError(f"The shift of {spec} is not irreducible")

    candidates = {
        'presentation': graph_period(presenting).per_graph,
        'follower-merged': graph_period(follower_minimize(presenting)).per_graph,
    }
    upper = min(candidates.values())

    periods = realized_periods(spec, bound, verbose=config.verbose)
    if periods:
        lower = gcd(reduce(gcd, periods), upper)
    else:
        logger.warning(f"No periodic point of {spec} up to period {bound}; lower bound is 1")
        lower = 1
    logger.info(f"T_graph of {spec} lies in [{lower}, {upper}] (evidence up to {bound})")
    return GraphPeriodBounds(lower, upper, bound, candidates, periods)


def prop1_necessary_check(spec: PftSpec, verdict: Optional[DescVerdict] = None,
                          config: Optional[PftConfig] = None) -> bool:
    """For a proper irreducible shift, check ``gcd(per(G_X), T) != 1``.

    Holds vacuously for ``T = 1``, for shifts found to be of finite type and
    for reducible shifts.
    """
    if spec.period == 1:
        return True
    if verdict is None:
        from .descriptive import t_desc_search
        verdict = t_desc_search(spec, config=config)
    if not verdict.is_proper:
        logger.debug(f"{spec} is of finite type; necessary condition is vacuous")
        return True
    irreducible, presenting = shift_is_irreducible(build_ms(spec))
    if not irreducible:
        logger.warning(f"{spec} is reducible; necessary condition is vacuous")
        return True
    per = graph_period(presenting).per_graph
    holds = gcd(per, spec.period) != 1
    if not holds:
        logger.warning(f"gcd(per(G)={per}, T={spec.period}) = 1 for a proper shift {spec}")
    return holds


def graph_at_least_seq_check(spec: PftSpec, config: Optional[PftConfig] = None) -> bool:
    """Check that the lower bound on ``T_graph`` is at least ``T_seq``.

    A shift without periodic points up to the bound fails the check.
    """
    config = config or DEFAULT_CONFIG
    seq = t_seq(spec, config=config.search)
    if not seq.found:
        return False
    bounds = t_graph_bounds(spec, config=config)
    return bounds.lower >= seq.value


__all__ = ["t_graph_bounds", "prop1_necessary_check", "graph_at_least_seq_check"]
