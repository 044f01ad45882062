"""
-------------------------------------------------
gapkit - SelectionConfig
-------------------------------------------------
"""

from enum import Enum
from dataclasses import dataclass
import math

from .Error import GapDataError

U64_MAX = 2 ** 64 - 1


class SelectionMode(str, Enum):
    GAP_WEIGHTED = 'gap-weighted'
    UNIFORM = 'uniform-random'

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class SelectionConfig:
    count: int
    mode: SelectionMode = SelectionMode.GAP_WEIGHTED
    temperature: float = 1.0
    seed: int = 0

    def __post_init__(self) -> None:
        if isinstance(self.mode, str) and not isinstance(self.mode, SelectionMode):
            try:
                object.__setattr__(self, 'mode', SelectionMode(self.mode))
            except ValueError:
                raise GapDataError(f"unknown selection mode '{self.mode}' (use {', '.join(m.value for m in SelectionMode)})") from None
        if int(self.count) != self.count or self.count < 1:
            raise GapDataError(f"selection count must be a positive integer, got {self.count}")
        if not (math.isfinite(self.temperature) and self.temperature > 0.0):
            raise GapDataError(f"temperature must be positive, got {self.temperature}")
        if int(self.seed) != self.seed or not (0 <= self.seed <= U64_MAX):
            raise GapDataError(f"seed must be an unsigned 64-bit integer, got {self.seed}")

    def checkPool(self, size: int) -> None:
        if self.count > size:
            raise GapDataError(f"cannot select {self.count} items from a pool of {size}")
