"""
-------------------------------------------------
gapkit - gap-aware selection simulator
-------------------------------------------------

gap-weighted mode draws items one at a time without
replacement, each with probability proportional to
exp(-m^2 / (2 tau)) among the items still left.
Uniform mode draws a plain random subset. All
randomness comes from numpy's PCG64 seeded with the
configured 64-bit seed; Monte Carlo trial i uses
trial_seed(seed, i).
-------------------------------------------------
"""

from typing import Dict, List, Sequence, Tuple
import math
import numpy as np

from gapkit.core.Error import GapDataError
from gapkit.core.SelectionConfig import SelectionConfig, SelectionMode
from .reduce import exact_sum


def trial_seed(seed: int, trial: int) -> np.random.SeedSequence:
    return np.random.SeedSequence(entropy=seed, spawn_key=(trial,))


def _generator(seed) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _validate(per_item: Sequence[Tuple[str, float]], config: SelectionConfig) -> Tuple[List[str], np.ndarray]:
    if len(per_item) == 0:
        raise GapDataError("selection needs a nonempty pool")
    ids = [str(id) for id, _ in per_item]
    if len(set(ids)) != len(ids):
        raise GapDataError("selection pool contains duplicate ids")
    values = np.array([v for _, v in per_item], dtype=np.float64)
    if not np.all(np.isfinite(values)):
        bad = ids[int(np.argwhere(~np.isfinite(values))[0][0])]
        raise GapDataError(f"non-finite distance for item '{bad}'")
    config.checkPool(len(ids))
    return ids, values


def _draw(values: np.ndarray, config: SelectionConfig, rng: np.random.Generator) -> List[int]:
    n = values.shape[0]
    if config.mode == SelectionMode.UNIFORM:
        return rng.choice(n, size=config.count, replace=False).tolist()

    logw = -values / (2.0 * config.temperature)
    remaining = np.ones(n, dtype=bool)
    chosen = []
    for _ in range(config.count):
        lw = np.where(remaining, logw, -np.inf)
        w = np.exp(lw - lw[remaining].max())
        cdf = np.cumsum(w)
        u = rng.random() * cdf[-1]
        i = int(np.searchsorted(cdf, u, side='right'))
        if i >= n or not remaining[i]:
            # rounding at the upper end of the cdf
            i = int(np.flatnonzero(remaining)[-1])
        remaining[i] = False
        chosen.append(i)
    return chosen


def select(per_item: Sequence[Tuple[str, float]], config: SelectionConfig) -> List[str]:
    ids, values = _validate(per_item, config)
    rng = _generator(np.random.SeedSequence(config.seed))
    return [ids[i] for i in _draw(values, config, rng)]


def _trial_indices(values: np.ndarray, config: SelectionConfig, trials: int) -> List[List[int]]:
    if int(trials) != trials or trials < 1:
        raise GapDataError(f"trials must be a positive integer, got {trials}")
    return [_draw(values, config, _generator(trial_seed(config.seed, t))) for t in range(int(trials))]


def selection_bias_report(per_item: Sequence[Tuple[str, float]], config: SelectionConfig, trials: int) -> Dict[str, float]:
    """
    Mean m^2 of the selected items averaged over seeded trials, against the
    pool mean. `stderr` is the standard error of the per-trial means.
    """
    ids, values = _validate(per_item, config)
    means = np.array([exact_sum(values[idx]) / len(idx) for idx in _trial_indices(values, config, trials)])
    mean_selected = exact_sum(means) / len(means)
    stderr = float(np.std(means, ddof=1) / math.sqrt(len(means))) if len(means) > 1 else 0.0
    return {
        'mean_selected_gap': mean_selected,
        'mean_pool_gap': exact_sum(values) / len(values),
        'stderr': stderr,
        'trials': int(trials),
    }


def selection_frequencies(per_item: Sequence[Tuple[str, float]], config: SelectionConfig, trials: int) -> Dict[str, float]:
    """Fraction of trials in which each id was selected."""
    ids, values = _validate(per_item, config)
    counts = np.zeros(len(ids), dtype=np.int64)
    for idx in _trial_indices(values, config, trials):
        counts[idx] += 1
    return {id: float(c) / trials for id, c in zip(ids, counts)}
