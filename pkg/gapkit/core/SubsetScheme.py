"""
-------------------------------------------------
gapkit - SubsetScheme / DiversityConfig
-------------------------------------------------
"""

from typing import Any, Dict, List, Mapping, Sequence
from dataclasses import dataclass
import math

from .Error import GapDataError, GapSchemeError
from .GridManifest import GridManifest


class SubsetScheme:
    """
    Named sub-pool definition: for some grid parameters, the values to keep.
    Parameters the scheme does not mention keep all of their values.
    """

    def __init__(self, name: str, kept_values: Mapping[str, Sequence[Any]]) -> None:
        if not name:
            raise GapSchemeError("scheme without a name")
        kept: Dict[str, List[Any]] = {}
        for parameter, values in kept_values.items():
            if not isinstance(values, (list, tuple)) or len(values) == 0:
                raise GapSchemeError(f"scheme '{name}' keeps no values of parameter '{parameter}'")
            kept[str(parameter)] = list(values)
        self.name: str = name
        self.kept_values: Dict[str, List[Any]] = kept

    def positions(self, grid: GridManifest) -> List[List[int]]:
        """Kept positions per grid parameter, validated against `grid`.

        Mentioned parameters keep the scheme's declared value order (BSAng runs 300, 330, 0, 30, 60)
        so consecutive kept values stay neighbours on the sub-grid.
        """
        for parameter in self.kept_values:
            if parameter not in grid.names:
                raise GapSchemeError(f"scheme '{self.name}' names unknown parameter '{parameter}' (grid has {', '.join(grid.names)})")

        kept_positions = []
        for p in grid.parameters:
            if p.name not in self.kept_values:
                kept_positions.append(list(range(len(p))))
                continue
            positions: List[int] = []
            for v in self.kept_values[p.name]:
                try:
                    i = p.position(v)
                except GapSchemeError:
                    raise GapSchemeError(f"scheme '{self.name}' keeps value '{v}' which parameter '{p.name}' does not have") from None
                if i not in positions:
                    positions.append(i)
            kept_positions.append(positions)
        return kept_positions

    def to_dict(self) -> Dict[str, Any]:
        return {'name': self.name, 'keep': {k: list(v) for k, v in self.kept_values.items()}}

    def __str__(self) -> str:
        return f"[Scheme:{self.name}:{','.join(f'{k}={len(v)}' for k, v in self.kept_values.items())}]"


@dataclass(frozen=True)
class DiversityConfig:
    exponent: float = 10.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.exponent) and self.exponent > 0.0):
            raise GapDataError(f"diversity exponent must be positive, got {self.exponent}")
