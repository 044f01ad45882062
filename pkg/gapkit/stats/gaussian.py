"""
-------------------------------------------------
gapkit - Gaussian reference model
         fit, Mahalanobis distance, log-density
-------------------------------------------------

The covariance is the maximum-likelihood estimate
(1/n). When the factorization fails a ridge is
added following a fixed, scale-aware schedule:

    requested, 1e-10*t, 1e-8*t, 1e-6*t, 1e-4*t

with t = trace(cov)/d (t = 1 if the trace is 0).
The ridge that succeeded is stored in the model.
-------------------------------------------------
"""

from typing import List
import math
import numpy as np
import scipy.linalg

from gapkit.core.Error import GapDataError, GapFactorizationError
from gapkit.core.FeatureSet import FeatureSet
from gapkit.core.GaussianModel import GaussianModel, cholesky_lower, condition_diagnostics
from .reduce import chunked_map

RIDGE_SCHEDULE = (1e-10, 1e-8, 1e-6, 1e-4)


def ridge_schedule(cov: np.ndarray, ridge: float) -> List[float]:
    d = cov.shape[0]
    t = float(np.trace(cov)) / d
    if not t > 0.0:
        t = 1.0
    schedule = [ridge]
    for c in RIDGE_SCHEDULE:
        # never regularize less than requested
        if c * t > ridge:
            schedule.append(c * t)
    return schedule


def fit_gaussian(reference: FeatureSet, ridge: float = 0.0) -> GaussianModel:
    if reference.n < 2:
        raise GapDataError(f"fitting a Gaussian needs at least 2 reference rows, got n={reference.n}")
    if not (math.isfinite(ridge) and ridge >= 0.0):
        raise GapDataError(f"ridge must be a finite nonnegative number, got {ridge}")

    X = reference.rows
    n, d = X.shape
    mean = X.mean(axis=0)
    centered = X - mean
    base = (centered.T @ centered) / n
    base = 0.5 * (base + base.T)

    schedule = ridge_schedule(base, ridge)
    eye = np.eye(d)
    for r in schedule:
        cov = base + r * eye if r > 0.0 else base
        chol = cholesky_lower(cov)
        if chol is None:
            continue

        diag = np.diag(chol) ** 2
        diagnostics = {
            'n': n,
            'rank_deficient': n <= d,
            'requested_ridge': ridge,
            'escalated': r != ridge,
            'condition': float(np.max(diag) / np.min(diag)),
        }
        return GaussianModel(mean, cov, chol, r, diagnostics)

    diagnostics = condition_diagnostics(base)
    diagnostics['max_ridge'] = schedule[-1]
    raise GapFactorizationError("covariance factorization failed at every ridge of the schedule", diagnostics)


def _check_vector(model: GaussianModel, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 1:
        raise GapDataError(f"expected a vector, got an array of shape {x.shape}")
    model.checkDim(x.shape[0])
    if not np.all(np.isfinite(x)):
        raise GapDataError("input vector contains non-finite values")
    return x


def mahalanobis_sq(model: GaussianModel, x: np.ndarray) -> float:
    """(x-mu)^T cov^-1 (x-mu), evaluated as ||L^-1 (x-mu)||^2."""
    x = _check_vector(model, x)
    z = scipy.linalg.solve_triangular(model.chol, x - model.mean, lower=True, check_finite=False)
    return float(z @ z)


def mahalanobis_sq_many(model: GaussianModel, X: np.ndarray, workers: int = 1) -> np.ndarray:
    """Row-wise squared Mahalanobis distances of an n x d matrix."""
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2:
        raise GapDataError(f"expected a matrix, got an array of shape {X.shape}")
    model.checkDim(X.shape[1])
    if not np.all(np.isfinite(X)):
        raise GapDataError("input rows contain non-finite values")

    L, mean = model.chol, model.mean

    def block(rows: np.ndarray) -> np.ndarray:
        z = scipy.linalg.solve_triangular(L, (rows - mean).T, lower=True, check_finite=False)
        return np.einsum('ij,ij->j', z, z)

    return chunked_map(block, X, workers)


def log_density(model: GaussianModel, x: np.ndarray) -> float:
    return -0.5 * mahalanobis_sq(model, x) - model.constant
