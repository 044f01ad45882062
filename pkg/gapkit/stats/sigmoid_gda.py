"""
-------------------------------------------------
gapkit - sigmoid / shared-covariance GDA
         equivalence
-------------------------------------------------

With a shared covariance the quadratic terms of the
two class log-densities cancel, so the GDA posterior
P(y=1|x) equals sigmoid(w.x + b) with

    w = cov^-1 (mu1 - mu0)
    b = -1/2 mu1^T cov^-1 mu1 + 1/2 mu0^T cov^-1 mu0
        + ln(beta1 / beta0)
-------------------------------------------------
"""

from typing import Tuple
import math
import numpy as np
import scipy.linalg
import scipy.special

from gapkit.core.Error import GapDataError
from gapkit.core.LdaParams import LdaParams, SigmoidClassifier
from .gaussian import log_density

# largest double below one; keeps posteriors strictly inside (0, 1)
_ONE_MINUS = float(np.nextafter(1.0, 0.0))
_TINY = float(np.finfo(np.float64).tiny)


def _quad(chol: np.ndarray, v: np.ndarray) -> float:
    z = scipy.linalg.solve_triangular(chol, v, lower=True, check_finite=False)
    return float(z @ z)


def lda_to_sigmoid(lda: LdaParams) -> SigmoidClassifier:
    L = lda.chol
    w = scipy.linalg.cho_solve((L, True), lda.mu1 - lda.mu0, check_finite=False)
    b = -0.5 * _quad(L, lda.mu1) + 0.5 * _quad(L, lda.mu0) + math.log(lda.beta1 / lda.beta0)
    return SigmoidClassifier(w, b)


def _squash(logit: float) -> float:
    # expit only exponentiates non-positive arguments
    p = float(scipy.special.expit(logit))
    return min(max(p, _TINY), _ONE_MINUS)


def posterior_sigmoid(clf: SigmoidClassifier, x: np.ndarray) -> float:
    x = np.asarray(x, dtype=np.float64).reshape(-1)
    if x.shape[0] != clf.dim:
        raise GapDataError(f"input has dimension {x.shape[0]} but the classifier has dimension {clf.dim}")
    if not np.all(np.isfinite(x)):
        raise GapDataError("input vector contains non-finite values")
    return _squash(float(clf.w @ x) + clf.b)


def posterior_gda(lda: LdaParams, x: np.ndarray) -> float:
    """beta1 N(x|mu1) / (beta0 N(x|mu0) + beta1 N(x|mu1)), formed from log-densities."""
    x = np.asarray(x, dtype=np.float64).reshape(-1)
    log1 = math.log(lda.beta1) + log_density(lda.category, x)
    log0 = math.log(lda.beta0) + log_density(lda.background, x)
    return _squash(log1 - log0)


def random_lda(rng: np.random.Generator, dim: int) -> LdaParams:
    """Random well-posed instance: SPD covariance A A^T + I scaled, means and priors drawn at random."""
    A = rng.normal(size=(dim, dim))
    cov = A @ A.T / dim + 0.5 * np.eye(dim)
    cov = 0.5 * (cov + cov.T)
    mu0 = rng.normal(scale=2.0, size=dim)
    mu1 = rng.normal(scale=2.0, size=dim)
    beta0, beta1 = np.exp(rng.uniform(-2.0, 2.0, size=2))
    return LdaParams(mu0, mu1, cov, float(beta0), float(beta1))


def equivalence_check(trials: int, dim_max: int, seed: int) -> Tuple[float, int]:
    """
    Largest |posterior_gda - posterior_sigmoid| over `trials` random instances
    with dimension 1..dim_max, one random query point each.
    Returns (max deviation, number of trials).
    """
    if trials < 1:
        raise GapDataError(f"trials must be at least 1, got {trials}")
    if dim_max < 1:
        raise GapDataError(f"dim-max must be at least 1, got {dim_max}")

    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        dim = int(rng.integers(1, dim_max + 1))
        lda = random_lda(rng, dim)
        clf = lda_to_sigmoid(lda)
        x = rng.normal(scale=3.0, size=dim)
        worst = max(worst, abs(posterior_gda(lda, x) - posterior_sigmoid(clf, x)))
    return worst, trials
