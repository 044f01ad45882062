"""
-------------------------------------------------
gapkit - Shared-covariance discriminant model
         and its linear sigmoid classifier
-------------------------------------------------
"""

import math
import numpy as np

from .Error import GapDataError, GapDimensionError
from .GaussianModel import GaussianModel


class LdaParams:
    """
    Two-class Gaussian discriminant model with one shared covariance.

    mu0 / beta0 describe the background class, mu1 / beta1 the category;
    the betas are unnormalized priors. Construction factorizes `cov`, so an
    instance always holds a usable Gaussian for each class.
    """

    def __init__(self, mu0: np.ndarray, mu1: np.ndarray, cov: np.ndarray, beta0: float = 1.0, beta1: float = 1.0) -> None:
        mu0 = np.asarray(mu0, dtype=np.float64).reshape(-1)
        mu1 = np.asarray(mu1, dtype=np.float64).reshape(-1)
        if mu0.shape != mu1.shape:
            raise GapDimensionError(f"class means differ in length: {mu0.shape[0]} vs {mu1.shape[0]}")
        for name, beta in (('beta0', beta0), ('beta1', beta1)):
            if not (math.isfinite(beta) and beta > 0.0):
                raise GapDataError(f"{name} must be a positive finite prior, got {beta}")

        self.background: GaussianModel = GaussianModel.from_moments(mu0, cov)
        self.category: GaussianModel = GaussianModel.from_moments(mu1, cov)
        self.beta0: float = float(beta0)
        self.beta1: float = float(beta1)

    @property
    def mu0(self) -> np.ndarray:
        return self.background.mean

    @property
    def mu1(self) -> np.ndarray:
        return self.category.mean

    @property
    def cov(self) -> np.ndarray:
        return self.background.cov

    @property
    def chol(self) -> np.ndarray:
        return self.background.chol

    @property
    def dim(self) -> int:
        return self.background.dim

    def __str__(self) -> str:
        return f"[LDA:d={self.dim}:beta={self.beta0:g}/{self.beta1:g}]"


class SigmoidClassifier:

    def __init__(self, w: np.ndarray, b: float) -> None:
        w = np.array(w, dtype=np.float64, copy=True).reshape(-1)
        if not (np.all(np.isfinite(w)) and math.isfinite(b)):
            raise GapDataError("sigmoid classifier weights must be finite")
        w.setflags(write=False)
        self.w: np.ndarray = w
        self.b: float = float(b)

    @property
    def dim(self) -> int:
        return self.w.shape[0]

    def __str__(self) -> str:
        return f"[Sigmoid:d={self.dim}:b={self.b:g}]"
