"""
-------------------------------------------------
gapkit - GaussianModel
         Multivariate Gaussian reference model:
         mean, covariance, its lower Cholesky
         factor, dimension and the ridge that was
         added to the diagonal.
-------------------------------------------------
"""

from typing import Any, Dict, Optional
import numpy as np
import scipy.linalg

from .Error import GapDimensionError, GapFactorizationError


def cholesky_lower(cov: np.ndarray) -> Optional[np.ndarray]:
    """Lower Cholesky factor of `cov`, or None when `cov` is not numerically positive definite."""
    try:
        chol = scipy.linalg.cholesky(cov, lower=True, check_finite=True)
    except (np.linalg.LinAlgError, ValueError):
        return None
    diag = np.diag(chol)
    if not np.all(np.isfinite(chol)) or not np.all(diag > 0.0):
        return None
    return chol


class GaussianModel:
    """
    Immutable Gaussian model N(mean, cov) with cached factor L (L @ L.T == cov).

    Use `fit_gaussian` to estimate one from a FeatureSet or `from_moments` to
    wrap given parameters.
    """

    def __init__(self, mean: np.ndarray, cov: np.ndarray, chol: np.ndarray, ridge: float = 0.0, diagnostics: Optional[Dict[str, Any]] = None) -> None:
        mean = np.array(mean, dtype=np.float64, copy=True).reshape(-1)
        cov = np.array(cov, dtype=np.float64, copy=True)
        chol = np.array(chol, dtype=np.float64, copy=True)
        d = mean.shape[0]
        if cov.shape != (d, d) or chol.shape != (d, d):
            raise GapDimensionError(f"mean of length {d} does not match covariance of shape {cov.shape}")

        for a in (mean, cov, chol):
            a.setflags(write=False)

        self.mean: np.ndarray = mean
        self.cov: np.ndarray = cov
        self.chol: np.ndarray = chol
        self.ridge: float = float(ridge)
        self.diagnostics: Dict[str, Any] = dict(diagnostics) if diagnostics is not None else {}

    @staticmethod
    def from_moments(mean: np.ndarray, cov: np.ndarray, ridge: float = 0.0, diagnostics: Optional[Dict[str, Any]] = None) -> 'GaussianModel':
        mean = np.asarray(mean, dtype=np.float64).reshape(-1)
        cov = np.asarray(cov, dtype=np.float64)
        d = mean.shape[0]
        if cov.shape != (d, d):
            raise GapDimensionError(f"mean of length {d} does not match covariance of shape {cov.shape}")

        scale = max(1.0, float(np.max(np.abs(cov)))) if cov.size else 1.0
        if not np.allclose(cov, cov.T, rtol=1e-12, atol=1e-12 * scale):
            raise GapFactorizationError("covariance is not symmetric", {'asymmetry': float(np.max(np.abs(cov - cov.T)))})

        chol = cholesky_lower(cov)
        if chol is None:
            raise GapFactorizationError("covariance is not positive definite", condition_diagnostics(cov))
        return GaussianModel(mean, cov, chol, ridge, diagnostics)

    @property
    def dim(self) -> int:
        return self.mean.shape[0]

    @property
    def logdet(self) -> float:
        """ln det(cov) = 2 * sum(ln L_ii)."""
        return 2.0 * float(np.sum(np.log(np.diag(self.chol))))

    @property
    def constant(self) -> float:
        """ln((2*pi)^(d/2) * det(cov)^(1/2)), the test-set independent part of the cross-entropy."""
        return 0.5 * self.dim * float(np.log(2.0 * np.pi)) + float(np.sum(np.log(np.diag(self.chol))))

    def checkDim(self, d: int, what: str = 'input') -> None:
        if d != self.dim:
            raise GapDimensionError(f"{what} has dimension {d} but the model has dimension {self.dim}")

    def __eq__(self, o: object) -> bool:
        if not isinstance(o, GaussianModel):
            return NotImplemented
        return np.array_equal(self.mean, o.mean) and np.array_equal(self.cov, o.cov) and self.ridge == o.ridge

    def __str__(self) -> str:
        return f"[GaussianModel:d={self.dim}:ridge={self.ridge:g}]"


def condition_diagnostics(cov: np.ndarray) -> Dict[str, Any]:
    """Eigenvalue summary of a (possibly indefinite) symmetric matrix for error reports."""
    try:
        eig = np.linalg.eigvalsh(0.5 * (cov + cov.T))
    except np.linalg.LinAlgError:
        return {'eigendecomposition': 'failed'}
    lo, hi = float(eig[0]), float(eig[-1])
    return {
        'min_eigenvalue': lo,
        'max_eigenvalue': hi,
        'condition': (hi / lo) if lo > 0 else float('inf'),
    }
