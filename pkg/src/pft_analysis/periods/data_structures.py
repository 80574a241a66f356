"""Data structures for period search results.

Every search result records the bounds it ran under, so a verdict such as
"no periodic point up to period 16" is never mistaken for an exact answer.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ..core.spec import PftSpec
from ..core.words import Alphabet, PeriodicWord

# Verdicts of one descriptive-period row
ACHIEVABLE = "achievable"
NOT_FOUND = "not-found"
INCONCLUSIVE = "inconclusive"


@dataclass
class SeqPeriodResult:
    """Smallest period found for a periodic point, or ``None`` up to ``bound``."""
    value: Optional[int]
    bound: int
    witness: Optional[PeriodicWord] = None
    method: str = "words"

    @property
    def found(self) -> bool:
        return self.value is not None

    def format(self) -> str:
        return str(self.value) if self.found else f"unknown>{self.bound}"

    def format_witness(self, alphabet: Optional[Alphabet] = None) -> str:
        return self.witness.format(alphabet) if self.witness is not None else "-"


@dataclass
class GraphPeriodBounds:
    """Bounds on the least period of an irreducible presentation.

    The upper bound is the period of an explicit irreducible presentation.
    The lower bound divides the period of every point found up to
    ``evidence_bound``; it is exact only if no longer period breaks it.
    """
    lower: int
    upper: int
    evidence_bound: int
    candidates: Dict[str, int] = field(default_factory=dict)
    realized_periods: List[int] = field(default_factory=list)
    lower_conditional: bool = True

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"Lower bound {self.lower} exceeds upper bound {self.upper}")

    @property
    def exact(self) -> Optional[int]:
        return self.upper if self.lower == self.upper else None

    def format(self) -> str:
        if self.lower == self.upper:
            return str(self.upper)
        return f"[{self.lower}, {self.upper}]"


@dataclass
class DescRow:
    """Outcome of the search for descriptions with period ``t_star``."""
    t_star: int
    verdict: str
    word_length: Optional[int] = None  # ℓ* of the description found
    max_len: int = 0
    schedule: Optional[PftSpec] = None
    reason: str = ""
    candidates: int = 0  # largest occurring-candidate set searched


@dataclass
class DescVerdict:
    """Smallest period among descriptions found, with the T* = 1 properness verdict."""
    t_desc: Optional[int]
    rows: List[DescRow] = field(default_factory=list)
    proper_up_to: Optional[int] = None
    sft_length: Optional[int] = None
    max_len: int = 0
    subset_budget: int = 0

    @property
    def is_proper(self) -> bool:
        """True when no SFT description exists up to ``proper_up_to``."""
        return self.proper_up_to is not None

    @property
    def conclusive(self) -> bool:
        """No row below ``t_desc`` was left inconclusive."""
        return all(row.verdict != INCONCLUSIVE for row in self.rows
                   if self.t_desc is None or row.t_star < self.t_desc)

    def properness(self) -> str:
        if self.is_proper:
            return f"proper-up-to({self.proper_up_to})"
        return f"sft(length {self.sft_length})"

    def format(self) -> str:
        if self.t_desc is None:
            return "unknown"
        return str(self.t_desc) if self.conclusive else f"<={self.t_desc}"

    def to_dataframe(self):
        """One row per T* searched."""
        import pandas as pd
        data = []
        for row in self.rows:
            data.append({
                't_star': row.t_star,
                'verdict': row.verdict,
                'word_length': row.word_length,
                'max_len': row.max_len,
                'candidates': row.candidates,
                'reason': row.reason,
            })
        return pd.DataFrame(data)


@dataclass
class PeriodTriple:
    """Sequential, graphical and descriptive periods of one shift."""
    t_seq: SeqPeriodResult
    t_graph: Optional[GraphPeriodBounds]
    t_desc: DescVerdict
    bounds: Dict[str, int] = field(default_factory=dict)
    t_graph_note: str = ""

    def to_dict(self) -> dict:
        return {
            't_seq': self.t_seq.format(),
            't_seq_witness': self.t_seq.format_witness(),
            't_graph': self.t_graph.format() if self.t_graph else self.t_graph_note or "undefined",
            't_graph_lower': self.t_graph.lower if self.t_graph else None,
            't_graph_upper': self.t_graph.upper if self.t_graph else None,
            't_graph_lower_conditional': self.t_graph.lower_conditional if self.t_graph else None,
            't_desc': self.t_desc.format(),
            'properness': self.t_desc.properness(),
            'bounds': dict(self.bounds),
        }

    def to_dataframe(self):
        import pandas as pd
        flat = {k: v for k, v in self.to_dict().items() if k != 'bounds'}
        flat.update({f"bound_{k}": v for k, v in self.bounds.items()})
        return pd.DataFrame({'quantity': list(flat), 'value': [str(v) for v in flat.values()]})


@dataclass
class ConjectureReport:
    """Whether ``T_desc`` divides the graphical period, as far as the bounds tell."""
    t_desc: Optional[int]
    t_graph_lower: Optional[int]
    t_graph_upper: Optional[int]

    @property
    def resolved(self) -> bool:
        return None not in (self.t_desc, self.t_graph_lower, self.t_graph_upper)

    @property
    def divides_lower(self) -> Optional[bool]:
        return self.t_graph_lower % self.t_desc == 0 if self.resolved else None

    @property
    def divides_upper(self) -> Optional[bool]:
        return self.t_graph_upper % self.t_desc == 0 if self.resolved else None

    @property
    def consistent(self) -> Optional[bool]:
        """Some multiple of the lower bound in range is also a multiple of ``t_desc``."""
        if not self.resolved:
            return None
        return any(m % self.t_desc == 0
                   for m in range(self.t_graph_lower, self.t_graph_upper + 1, self.t_graph_lower))

    def to_dict(self) -> dict:
        return {
            't_desc': self.t_desc,
            't_graph_lower': self.t_graph_lower,
            't_graph_upper': self.t_graph_upper,
            'divides_lower': self.divides_lower,
            'divides_upper': self.divides_upper,
            'consistent': self.consistent,
        }


__all__ = [
    "ACHIEVABLE",
    "NOT_FOUND",
    "INCONCLUSIVE",
    "SeqPeriodResult",
    "GraphPeriodBounds",
    "DescRow",
    "DescVerdict",
    "PeriodTriple",
    "ConjectureReport",
]
