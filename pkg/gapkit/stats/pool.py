"""
-------------------------------------------------
gapkit - synthetic pool analysis
-------------------------------------------------

density     mean raw inner product f(p).f(q) over
            grid-adjacent pairs
diversity   mean ||f(x) - mu||^k over the pool,
            mu the mean feature
domain gap  distribution gap of the pool against
            the reference model
frechet     closed-form 2-Wasserstein distance
            between two Gaussians
-------------------------------------------------
"""

from typing import Any, Dict, List, Sequence
import numpy as np
import scipy.linalg

from gapkit.core.AdjacencyPairs import AdjacencyPairs
from gapkit.core.Error import GapDataError, GapDimensionError, GapNumericError
from gapkit.core.FeatureSet import FeatureSet
from gapkit.core.GaussianModel import GaussianModel
from gapkit.core.GridManifest import GridManifest
from gapkit.core.SubsetScheme import DiversityConfig, SubsetScheme
from .gap import distribution_gap
from .reduce import chunked_map, exact_sum


def expected_pair_count(grid: GridManifest) -> int:
    """sum_p (|V_p| - 1) * prod_{q != p} |V_q|; a cyclic parameter with more than two values closes the ring."""
    shape = grid.shape
    total = 0
    for i, p in enumerate(grid.parameters):
        others = int(np.prod([s for j, s in enumerate(shape) if j != i], dtype=np.int64))
        links = len(p) if (p.cyclic and len(p) > 2) else len(p) - 1
        total += links * others
    return total


def adjacency_pairs(grid: GridManifest) -> AdjacencyPairs:
    ids = grid.idArray
    pairs = []
    for axis, p in enumerate(grid.parameters):
        s = len(p)
        if s < 2:
            continue
        lo = np.take(ids, np.arange(s - 1), axis=axis)
        hi = np.take(ids, np.arange(1, s), axis=axis)
        pairs.extend(zip(lo.reshape(-1).tolist(), hi.reshape(-1).tolist()))
        if p.cyclic and s > 2:
            last = np.take(ids, [s - 1], axis=axis)
            first = np.take(ids, [0], axis=axis)
            pairs.extend(zip(last.reshape(-1).tolist(), first.reshape(-1).tolist()))
    return AdjacencyPairs(pairs)


def density(pool: FeatureSet, pairs: AdjacencyPairs, workers: int = 1) -> float:
    if len(pairs) == 0:
        raise GapDataError("density needs at least one adjacency pair")
    index = np.array([[pool.indexOf(a), pool.indexOf(b)] for a, b in pairs], dtype=np.int64)
    F = pool.rows

    def block(idx: np.ndarray) -> np.ndarray:
        return np.einsum('ij,ij->i', F[idx[:, 0]], F[idx[:, 1]])

    return exact_sum(chunked_map(block, index, workers)) / len(pairs)


def diversity(pool: FeatureSet, config: DiversityConfig = DiversityConfig()) -> float:
    if pool.n < 1:
        raise GapDataError("diversity needs at least one pool row")
    X = pool.rows
    r = np.linalg.norm(X - X.mean(axis=0), axis=1)
    k = config.exponent
    contrib = np.zeros_like(r)
    nz = r > 0.0
    with np.errstate(over='ignore'):
        contrib[nz] = np.exp(k * np.log(r[nz]))
    return exact_sum(contrib) / pool.n


def pool_domain_gap(reference: GaussianModel, pool: FeatureSet, workers: int = 1) -> float:
    return distribution_gap(reference, pool, workers)


def _psd_sqrt(cov: np.ndarray) -> np.ndarray:
    w, V = scipy.linalg.eigh(cov)
    return (V * np.sqrt(np.clip(w, 0.0, None))) @ V.T


def frechet_gaussian(a: GaussianModel, b: GaussianModel) -> float:
    """||mu_a - mu_b||^2 + tr(S_a + S_b - 2 (S_a S_b)^(1/2)), via eig(S_a^1/2 S_b S_a^1/2)."""
    if a.dim != b.dim:
        raise GapDimensionError(f"cannot compare models of dimension {a.dim} and {b.dim}")
    try:
        root = _psd_sqrt(a.cov)
        M = root @ b.cov @ root
        eig = scipy.linalg.eigh(0.5 * (M + M.T), eigvals_only=True)
    except (np.linalg.LinAlgError, ValueError) as e:
        raise GapNumericError(f"eigendecomposition failed: {e}") from None

    diff = a.mean - b.mean
    value = float(diff @ diff) + float(np.trace(a.cov)) + float(np.trace(b.cov)) - 2.0 * float(np.sum(np.sqrt(np.clip(eig, 0.0, None))))
    return max(0.0, value)


def sample_subset(grid: GridManifest, scheme: SubsetScheme) -> List[str]:
    """Ids of the combinations whose every parameter value is kept, grid row-major order."""
    kept = [sorted(k) for k in scheme.positions(grid)]
    return [str(i) for i in grid.idArray[np.ix_(*kept)].reshape(-1)]


def subset_grid(grid: GridManifest, scheme: SubsetScheme) -> GridManifest:
    """Sub-grid of the kept values; mentioned parameters follow the scheme's value order."""
    return grid.restrict(scheme.positions(grid))


def pool_properties(reference: GaussianModel, pool: FeatureSet, grid: GridManifest, config: DiversityConfig = DiversityConfig(), workers: int = 1) -> Dict[str, Any]:
    """Density, diversity, domain gap and pair count of the pool restricted to the grid ids."""
    members = pool.subset(grid.ids)
    pairs = adjacency_pairs(grid)
    return {
        'n': members.n,
        'pairs': len(pairs),
        'density': density(members, pairs, workers),
        'diversity': diversity(members, config),
        'domain_gap': pool_domain_gap(reference, members, workers),
    }


def compare_subsets(reference: GaussianModel, pool: FeatureSet, grid: GridManifest, schemes: Sequence[SubsetScheme], config: DiversityConfig = DiversityConfig(), workers: int = 1) -> List[Dict[str, Any]]:
    table = []
    for scheme in schemes:
        row: Dict[str, Any] = {'name': scheme.name}
        row.update(pool_properties(reference, pool, subset_grid(grid, scheme), config, workers))
        table.append(row)
    return table
