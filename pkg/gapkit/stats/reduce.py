"""
-------------------------------------------------
gapkit - chunked maps and deterministic sums
-------------------------------------------------

Rows are split into chunks whose boundaries depend
only on the row count, never on the number of
workers; sums are correctly rounded (math.fsum).
Together this keeps every reported number identical
across thread counts.
-------------------------------------------------
"""

from typing import Callable, Iterable, List, TypeVar
from concurrent.futures import ThreadPoolExecutor
import math
import numpy as np

CHUNK_ROWS = 4096

T = TypeVar('T')


def chunk_bounds(n: int, chunk: int = CHUNK_ROWS) -> List[range]:
    return [range(lo, min(lo + chunk, n)) for lo in range(0, n, chunk)]


def chunked_map(func: Callable[[np.ndarray], np.ndarray], rows: np.ndarray, workers: int = 1) -> np.ndarray:
    """Apply `func` to fixed-size row chunks (optionally on a thread pool) and concatenate."""
    n = rows.shape[0]
    if n == 0:
        return np.empty(0, dtype=np.float64)

    chunks = [rows[r.start:r.stop] for r in chunk_bounds(n)]
    if workers <= 1 or len(chunks) == 1:
        parts = [func(c) for c in chunks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(func, chunks))
    return np.concatenate(parts)


def exact_sum(values: Iterable[float]) -> float:
    return math.fsum(np.asarray(values, dtype=np.float64).reshape(-1).tolist())


