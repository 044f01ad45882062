import os
import numpy as np
import pytest

from gapkit.core import FeatureSet, GaussianModel

TOY = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data', 'toy')


def random_spd(rng: np.random.Generator, d: int) -> np.ndarray:
    A = rng.normal(size=(d, d))
    cov = A @ A.T + d * np.eye(d)
    return 0.5 * (cov + cov.T)


def features(rows, scores=None, prefix: str = 'x') -> FeatureSet:
    rows = np.atleast_2d(np.asarray(rows, dtype=np.float64))
    return FeatureSet([f"{prefix}{i}" for i in range(rows.shape[0])], rows, scores)


def model(mean, cov) -> GaussianModel:
    return GaussianModel.from_moments(np.asarray(mean, dtype=np.float64), np.asarray(cov, dtype=np.float64))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240517)


@pytest.fixture
def toy() -> str:
    return TOY
