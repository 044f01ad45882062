"""
-------------------------------------------------
gapkit - AdjacencyPairs
         Unordered id pairs whose grid
         combinations differ in one parameter by
         neighbouring values.
-------------------------------------------------
"""

from typing import Iterator, List, Sequence, Tuple

from .Error import GapDataError


class AdjacencyPairs:

    def __init__(self, pairs: Sequence[Tuple[str, str]]) -> None:
        seen = set()
        for a, b in pairs:
            if a == b:
                raise GapDataError(f"self-pair ('{a}', '{b}') in adjacency list")
            key = (a, b) if a < b else (b, a)
            if key in seen:
                raise GapDataError(f"pair ('{a}', '{b}') appears twice in adjacency list")
            seen.add(key)
        self.pairs: List[Tuple[str, str]] = [(str(a), str(b)) for a, b in pairs]

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[Tuple[str, str]]:
        return iter(self.pairs)

    def __str__(self) -> str:
        return f"[AdjacencyPairs:{len(self)}]"
