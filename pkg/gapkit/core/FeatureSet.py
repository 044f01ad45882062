"""
-------------------------------------------------
gapkit - FeatureSet
         n rows of d-dimensional feature vectors
         with stable ids and optional detection
         scores.
-------------------------------------------------
"""

from typing import Dict, List, Optional, Sequence
import numpy as np

from .Error import GapDataError, GapDimensionError, GapUnknownIdError


class FeatureSet:
    """
    Immutable container of feature embeddings.

    The constructor validates every invariant (unique ids, finite entries,
    scores in [0, 1]); arrays are copied to float64 and flagged read-only so
    instances can be shared between workers.
    """

    def __init__(self, ids: Sequence[str], rows: np.ndarray, scores: Optional[Sequence[float]] = None) -> None:
        rows = np.array(rows, dtype=np.float64, copy=True)
        if rows.ndim != 2:
            raise GapDimensionError(f"feature rows must be a 2-d matrix, got {rows.ndim} dimension(s)")

        n, d = rows.shape
        if d < 1:
            raise GapDimensionError("feature dimension must be positive")

        ids = [str(i) for i in ids]
        if len(ids) != n:
            raise GapDataError(f"{len(ids)} ids for {n} rows")

        seen: Dict[str, int] = {}
        for row, id in enumerate(ids, start=1):
            if id == '':
                raise GapDataError(f"row {row}: missing id")
            if id in seen:
                raise GapDataError(f"duplicate id '{id}' in rows {seen[id]} and {row}")
            seen[id] = row

        if not np.all(np.isfinite(rows)):
            bad = int(np.argwhere(~np.isfinite(rows))[0][0]) + 1
            raise GapDataError(f"row {bad}: non-finite feature value")

        score_arr: Optional[np.ndarray] = None
        if scores is not None:
            score_arr = np.array(scores, dtype=np.float64, copy=True).reshape(-1)
            if score_arr.shape[0] != n:
                raise GapDataError(f"{score_arr.shape[0]} scores for {n} rows")
            bad_mask = ~(np.isfinite(score_arr) & (score_arr >= 0.0) & (score_arr <= 1.0))
            if np.any(bad_mask):
                bad = int(np.argwhere(bad_mask)[0][0])
                raise GapDataError(f"row {bad + 1}: score {score_arr[bad]} outside [0, 1]")
            score_arr.setflags(write=False)

        rows.setflags(write=False)
        self._ids: List[str] = ids
        self._index: Dict[str, int] = {id: i for i, id in enumerate(ids)}
        self._rows: np.ndarray = rows
        self._scores: Optional[np.ndarray] = score_arr

    @property
    def ids(self) -> List[str]:
        return list(self._ids)

    @property
    def rows(self) -> np.ndarray:
        return self._rows

    @property
    def scores(self) -> Optional[np.ndarray]:
        return self._scores

    @property
    def n(self) -> int:
        return self._rows.shape[0]

    @property
    def dim(self) -> int:
        return self._rows.shape[1]

    @property
    def hasScores(self) -> bool:
        return self._scores is not None

    def indexOf(self, id: str) -> int:
        try:
            return self._index[id]
        except KeyError:
            raise GapUnknownIdError(id) from None

    def __contains__(self, id: str) -> bool:
        return id in self._index

    def __len__(self) -> int:
        return self.n

    def row(self, id: str) -> np.ndarray:
        return self._rows[self.indexOf(id)]

    def subset(self, ids: Sequence[str]) -> 'FeatureSet':
        idx = [self.indexOf(id) for id in ids]
        scores = self._scores[idx] if self._scores is not None else None
        return FeatureSet(list(ids), self._rows[idx], scores)

    def __eq__(self, o: object) -> bool:
        if not isinstance(o, FeatureSet):
            return NotImplemented
        if self._ids != o._ids or not np.array_equal(self._rows, o._rows):
            return False
        if (self._scores is None) != (o._scores is None):
            return False
        return self._scores is None or np.array_equal(self._scores, o._scores)

    def __str__(self) -> str:
        return f"[FeatureSet:n={self.n}:d={self.dim}:scores={'yes' if self.hasScores else 'no'}]"
