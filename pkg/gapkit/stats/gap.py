"""
-------------------------------------------------
gapkit - distribution gap analysis
-------------------------------------------------

distribution gap  = 1/(2n) * sum of squared
                    Mahalanobis distances of the
                    test rows to the reference model
cross-entropy     = distribution gap + C,
                    C = ln((2 pi)^(d/2) det(cov)^(1/2))
filtered gap      = the gap over the m smallest
                    distances, m = max(1, floor(f n)),
                    ties by ascending id
-------------------------------------------------
"""

from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple
import math
import numpy as np

from gapkit.core.Error import GapDataError
from gapkit.core.FeatureSet import FeatureSet
from gapkit.core.GapReport import GapReport, Histogram
from gapkit.core.GaussianModel import GaussianModel
from .gaussian import mahalanobis_sq_many
from .reduce import exact_sum

# absorbs products like 0.7 * 10 = 7.000000000000001 vs 0.29 * 100 = 28.999999999999996
_FLOOR_SLACK = 1e-9


def _distances(model: GaussianModel, test: FeatureSet, workers: int = 1) -> np.ndarray:
    if test.n == 0:
        raise GapDataError("test set is empty")
    model.checkDim(test.dim, 'test set')
    return mahalanobis_sq_many(model, test.rows, workers)


def per_sample_gaps(model: GaussianModel, test: FeatureSet, workers: int = 1) -> List[Tuple[str, float]]:
    values = _distances(model, test, workers)
    return list(zip(test.ids, values.tolist()))


def gap_of(values: Sequence[float]) -> float:
    if len(values) == 0:
        raise GapDataError("cannot compute a gap over zero samples")
    return exact_sum(values) / (2.0 * len(values))


def distribution_gap(model: GaussianModel, test: FeatureSet, workers: int = 1) -> float:
    return gap_of(_distances(model, test, workers))


def cross_entropy(model: GaussianModel, test: FeatureSet, workers: int = 1) -> float:
    return distribution_gap(model, test, workers) + model.constant


def check_fraction(fraction: float) -> float:
    fraction = float(fraction)
    if not (0.0 < fraction <= 1.0):
        raise GapDataError(f"fraction must lie in (0, 1], got {fraction}")
    return fraction


def kept_count(fraction: float, n: int) -> int:
    return max(1, min(n, int(math.floor(check_fraction(fraction) * n + _FLOOR_SLACK))))


def filtered_gap_of(per_sample: Sequence[Tuple[str, float]], fraction: float) -> float:
    m = kept_count(fraction, len(per_sample))
    ranked = sorted(per_sample, key=lambda item: (item[1], item[0]))
    return gap_of([v for _, v in ranked[:m]])


def filtered_gap(model: GaussianModel, test: FeatureSet, fraction: float, workers: int = 1) -> float:
    """Gap over the floor(fraction * n + 1e-9) closest samples, at least one; ties break by id.

    The 1e-9 slack departs from a literal floor(fraction * n) where the product lands just below
    an integer: 0.29 * 100 keeps 29 samples, not 28.
    """
    check_fraction(fraction)
    return filtered_gap_of(per_sample_gaps(model, test, workers), fraction)


def histogram(per_sample: Sequence[Tuple[str, float]], bins: int, range: Optional[Tuple[float, float]] = None) -> Histogram:
    """
    Equal-width histogram of distances sqrt(m^2), default range [0, max distance].
    Values outside the range are clamped into the edge bins and counted in `clamped`.
    """
    if int(bins) != bins or bins < 1:
        raise GapDataError(f"bins must be a positive integer, got {bins}")
    bins = int(bins)
    distances = np.sqrt(np.maximum(np.array([v for _, v in per_sample], dtype=np.float64), 0.0))

    if range is not None:
        lo, hi = float(range[0]), float(range[1])
        if not lo < hi:
            raise GapDataError(f"histogram range needs lo < hi, got ({lo}, {hi})")
    else:
        lo = 0.0
        hi = float(distances.max()) if distances.size else 0.0
        if hi <= lo:
            # every distance is zero: one degenerate bin
            return Histogram([(lo, hi, int(distances.size))], 0)

    clamped = int(np.count_nonzero((distances < lo) | (distances > hi)))
    counts, edges = np.histogram(np.clip(distances, lo, hi), bins=bins, range=(lo, hi))
    rows = [(float(edges[i]), float(edges[i + 1]), int(counts[i])) for i in np.arange(bins)]
    return Histogram(rows, clamped)


def scatter_export(model: GaussianModel, test: FeatureSet, workers: int = 1) -> List[Tuple[float, float]]:
    """(detection score, distance) per test row, input order."""
    if test.scores is None:
        raise GapDataError("scatter export needs detection scores, but the test set has none")
    values = _distances(model, test, workers)
    return list(zip(test.scores.tolist(), np.sqrt(values).tolist()))


def outlier_count(per_sample: Sequence[Tuple[str, float]], threshold: float) -> int:
    """Number of samples whose distance sqrt(m^2) exceeds `threshold`."""
    if not (math.isfinite(threshold) and threshold >= 0.0):
        raise GapDataError(f"outlier threshold must be a nonnegative number, got {threshold}")
    return sum(1 for _, v in per_sample if math.sqrt(v) > threshold)


def build_gap_report(model: GaussianModel,
                     test: FeatureSet,
                     fractions: Sequence[float] = (1.0,),
                     bins: int = 20,
                     range: Optional[Tuple[float, float]] = None,
                     scatter: bool = True,
                     outlier_threshold: Optional[float] = None,
                     workers: int = 1) -> GapReport:
    fractions = [check_fraction(f) for f in fractions]
    per_sample = per_sample_gaps(model, test, workers)
    values = [v for _, v in per_sample]
    gap_all = gap_of(values)

    warnings: List[str] = []
    scatter_rows: Optional[List[Tuple[float, float]]] = None
    if scatter:
        if test.scores is not None:
            scatter_rows = list(zip(test.scores.tolist(), np.sqrt(values).tolist()))
        else:
            warnings.append("scatter omitted: test set has no detection scores")

    outliers = None
    if outlier_threshold is not None:
        outliers = {'threshold': float(outlier_threshold), 'count': outlier_count(per_sample, outlier_threshold)}

    return GapReport(
        per_sample=per_sample,
        gap_all=gap_all,
        gap_filtered={f: filtered_gap_of(per_sample, f) for f in fractions},
        cross_entropy=gap_all + model.constant,
        constant_term=model.constant,
        histogram=histogram(per_sample, bins, range),
        scatter=scatter_rows,
        outliers=outliers,
        warnings=warnings,
    )


def gap_change(before: GaussianModel, after: GaussianModel, test: FeatureSet, workers: int = 1) -> Tuple[List[Tuple[str, float, float, float]], Dict[str, Any]]:
    """
    Per-sample distance change when the reference model changes from `before`
    to `after` (e.g. reference data extended with synthetic images).
    Returns rows (id, distance_before, distance_after, delta) and a summary.
    """
    d0 = np.sqrt(_distances(before, test, workers))
    d1 = np.sqrt(_distances(after, test, workers))
    delta = d1 - d0
    rows = list(zip(test.ids, d0.tolist(), d1.tolist(), delta.tolist()))
    summary = {
        'n': test.n,
        'mean_delta': exact_sum(delta) / test.n,
        'increased': int(np.count_nonzero(delta > 0.0)),
        'decreased': int(np.count_nonzero(delta < 0.0)),
        'gap_before': gap_of(d0 ** 2),
        'gap_after': gap_of(d1 ** 2),
    }
    return rows, summary


def compare_gaps(model: GaussianModel, tests: Mapping[str, FeatureSet], fractions: Sequence[float] = (1.0,), workers: int = 1) -> List[Dict[str, Any]]:
    """One row per named test set: n, gap_all and filtered gaps."""
    fractions = [check_fraction(f) for f in fractions]
    table = []
    for name, test in tests.items():
        per_sample = per_sample_gaps(model, test, workers)
        row: Dict[str, Any] = {
            'name': name,
            'n': test.n,
            'gap_all': gap_of([v for _, v in per_sample]),
        }
        for f in fractions:
            row[f"gap_{f:g}"] = filtered_gap_of(per_sample, f)
        table.append(row)
    return table
