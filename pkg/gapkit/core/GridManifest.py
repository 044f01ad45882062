"""
-------------------------------------------------
gapkit - GridManifest
         Rendering-parameter grid of a synthetic
         pool: ordered parameter value lists and a
         bijection from value combinations to
         FeatureSet ids.
-------------------------------------------------
"""

from typing import Any, Dict, List, Mapping, Sequence, Tuple
import itertools, numbers
import numpy as np

from .Error import GapDataError, GapSchemeError


def value_equals(a: Any, b: Any) -> bool:
    """Numbers compare numerically (10 == 10.0), everything else by string form."""
    a_num = isinstance(a, numbers.Real) and not isinstance(a, bool)
    b_num = isinstance(b, numbers.Real) and not isinstance(b, bool)
    if a_num and b_num:
        return bool(a == b)
    return str(a) == str(b)


class GridParameter:

    def __init__(self, name: str, values: Sequence[Any], cyclic: bool = False) -> None:
        if not isinstance(name, str) or not name:
            raise GapDataError("grid parameter without a name")
        values = tuple(values)
        if len(values) == 0:
            raise GapDataError(f"grid parameter '{name}' has no values")
        for i, j in itertools.combinations(range(len(values)), 2):
            if value_equals(values[i], values[j]):
                raise GapDataError(f"grid parameter '{name}' lists value '{values[i]}' twice")

        self.name: str = name
        self.values: Tuple[Any, ...] = values
        self.cyclic: bool = bool(cyclic)

    def __len__(self) -> int:
        return len(self.values)

    def position(self, value: Any) -> int:
        for i, v in enumerate(self.values):
            if value_equals(v, value):
                return i
        raise GapSchemeError(f"value '{value}' is not a value of grid parameter '{self.name}'")

    def __str__(self) -> str:
        return f"[P:{self.name}:{len(self)}{':cyclic' if self.cyclic else ''}]"


class GridManifest:
    """
    Validated rendering-parameter grid.

    Ids are stored in a row-major object array shaped by the value-list
    lengths, so `idAt(positions)` and neighbour enumeration are index lookups.
    """

    def __init__(self, parameters: Sequence[GridParameter], assignment: Mapping[Tuple[Any, ...], str]) -> None:
        if len(parameters) == 0:
            raise GapDataError("grid manifest has no parameters")

        names = [p.name for p in parameters]
        if len(set(names)) != len(names):
            raise GapDataError(f"grid manifest repeats a parameter name: {names}")

        self.parameters: Tuple[GridParameter, ...] = tuple(parameters)
        shape = self.shape
        expected = int(np.prod(shape, dtype=np.int64))

        if len(assignment) != expected:
            raise GapDataError(f"grid has {expected} combinations but {len(assignment)} ids are assigned")

        ids = np.empty(shape, dtype=object)
        owner: Dict[str, Tuple[Any, ...]] = {}
        for combination, id in assignment.items():
            if len(combination) != len(self.parameters):
                raise GapDataError(f"combination {list(combination)} does not name a value for each of {len(self.parameters)} parameters")
            try:
                positions = tuple(p.position(v) for p, v in zip(self.parameters, combination))
            except GapSchemeError as e:
                raise GapDataError(str(e)) from None
            if ids[positions] is not None:
                raise GapDataError(f"combination {list(combination)} is assigned twice")
            id = str(id)
            if id in owner:
                raise GapDataError(f"id '{id}' is assigned to two combinations: {list(owner[id])} and {list(combination)}")
            owner[id] = tuple(combination)
            ids[positions] = id

        self._ids: np.ndarray = ids
        self._ids.setflags(write=False)

    @staticmethod
    def from_template(parameters: Sequence[GridParameter], template: str) -> 'GridManifest':
        """Assign `template.format(**combination)` to every combination, row-major."""
        assignment: Dict[Tuple[Any, ...], str] = {}
        for combination in itertools.product(*[p.values for p in parameters]):
            try:
                assignment[combination] = template.format(**{p.name: v for p, v in zip(parameters, combination)})
            except (KeyError, IndexError, ValueError, TypeError, AttributeError) as e:
                raise GapDataError(f"id template '{template}' cannot be formatted: {e}") from None
        return GridManifest(parameters, assignment)

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(len(p) for p in self.parameters)

    @property
    def size(self) -> int:
        return int(np.prod(self.shape, dtype=np.int64))

    @property
    def names(self) -> List[str]:
        return [p.name for p in self.parameters]

    @property
    def ids(self) -> List[str]:
        return [str(i) for i in self._ids.reshape(-1)]

    @property
    def idArray(self) -> np.ndarray:
        return self._ids

    def idAt(self, positions: Sequence[int]) -> str:
        return str(self._ids[tuple(positions)])

    def restrict(self, kept_positions: Sequence[Sequence[int]]) -> 'GridManifest':
        """Sub-grid keeping the given positions of each parameter, in the order given."""
        parameters = []
        for p, keep in zip(self.parameters, kept_positions):
            parameters.append(GridParameter(p.name, [p.values[i] for i in keep], p.cyclic and closes_ring(keep, len(p))))
        sub = self._ids[np.ix_(*[list(k) for k in kept_positions])]
        assignment: Dict[Tuple[Any, ...], str] = {}
        for positions in itertools.product(*[range(len(k)) for k in kept_positions]):
            values = tuple(p.values[i] for p, i in zip(parameters, positions))
            assignment[values] = str(sub[positions])
        return GridManifest(parameters, assignment)

    def __str__(self) -> str:
        return f"[Grid:{'x'.join(str(s) for s in self.shape)}:{' '.join(str(p) for p in self.parameters)}]"


def closes_ring(keep: Sequence[int], size: int) -> bool:
    """Kept positions of a cyclic parameter still go round: the step from last back to first is no wider than any other."""
    if len(keep) < 2:
        return False
    steps = [(b - a) % size for a, b in zip(keep, keep[1:])]
    return (keep[0] - keep[-1]) % size <= max(steps)


def make_parameters(records: Sequence[Mapping[str, Any]]) -> List[GridParameter]:
    """Build parameters from `[{name, values, cyclic?}]` records."""
    parameters = []
    for i, entry in enumerate(records):
        if not isinstance(entry, Mapping) or 'name' not in entry or 'values' not in entry:
            raise GapDataError(f"parameter entry {i} needs 'name' and 'values'")
        values = entry['values']
        if not isinstance(values, (list, tuple)):
            raise GapDataError(f"values of parameter '{entry['name']}' must be a list")
        parameters.append(GridParameter(str(entry['name']), values, bool(entry.get('cyclic', False))))
    return parameters
