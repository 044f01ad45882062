"""
-------------------------------------------------
gapkit - GapReport
         Result bundle of a distribution-gap run.
-------------------------------------------------
"""

from typing import Any, Dict, List, Optional, Tuple
from dataclasses import dataclass, field


@dataclass
class Histogram:
    bins: List[Tuple[float, float, int]]
    clamped: int = 0

    @property
    def counts(self) -> List[int]:
        return [c for _, _, c in self.bins]

    def rows(self) -> List[List[Any]]:
        return [[lo, hi, c] for lo, hi, c in self.bins]


@dataclass
class GapReport:
    per_sample: List[Tuple[str, float]]
    gap_all: float
    gap_filtered: Dict[float, float]
    cross_entropy: float
    constant_term: float
    histogram: Histogram
    scatter: Optional[List[Tuple[float, float]]] = None
    outliers: Optional[Dict[str, Any]] = None
    warnings: List[str] = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.per_sample)

    def to_dict(self) -> Dict[str, Any]:
        report: Dict[str, Any] = {
            'n': self.n,
            'gap_all': self.gap_all,
            'gap_filtered': {repr(float(f)): v for f, v in sorted(self.gap_filtered.items())},
            'cross_entropy': self.cross_entropy,
            'constant_term': self.constant_term,
            'histogram': {
                'bins': self.histogram.rows(),
                'clamped': self.histogram.clamped,
            },
            'per_sample': [[id, m] for id, m in self.per_sample],
            'warnings': list(self.warnings),
        }
        if self.scatter is not None:
            report['scatter'] = [[s, r] for s, r in self.scatter]
        if self.outliers is not None:
            report['outliers'] = dict(self.outliers)
        return report
