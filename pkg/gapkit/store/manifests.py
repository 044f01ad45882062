"""
-------------------------------------------------
gapkit - grid manifest and subset scheme files
-------------------------------------------------

Grid manifest (YAML):

    parameters:
      - name: altitude
        values: [5, 10, 15]
      - name: angle
        values: [0, 120, 240]
        cyclic: true
    id_template: "alt{altitude}_ang{angle}"    # or:
    assignment:
      - id: img_000
        values: [5, 0]

Scheme file (YAML):

    schemes:
      - name: low
        keep:
          altitude: [5, 10]
-------------------------------------------------
"""

from typing import Any, Dict, List, Optional, Tuple
import os, yaml

from gapkit.core.Error import GapDataError, GapFormatError, GapSchemeError
from gapkit.core.GridManifest import GridManifest, make_parameters
from gapkit.core.SubsetScheme import SubsetScheme
from gapkit.core.templates import archangel_grid, builtin_schemes

BUILTIN_GRIDS = {
    'archangel': archangel_grid,
}


def _load_yaml(path: str, what: str) -> Dict[str, Any]:
    if not os.path.isfile(path):
        raise GapFormatError(f"{what} not found", path)
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = yaml.safe_load(f)
    except (yaml.YAMLError, ValueError) as e:
        raise GapFormatError(f"invalid YAML: {e}", path) from None
    if not isinstance(data, dict):
        raise GapFormatError(f"{what} must be a YAML mapping", path)
    return data


def read_grid_manifest(path: str) -> GridManifest:
    data = _load_yaml(path, 'grid manifest')
    if not isinstance(data.get('parameters'), list):
        raise GapFormatError("grid manifest needs a 'parameters' list", path)

    try:
        parameters = make_parameters(data['parameters'])

        if 'id_template' in data:
            if 'assignment' in data:
                raise GapFormatError("use either 'id_template' or 'assignment', not both", path)
            return GridManifest.from_template(parameters, str(data['id_template']))

        entries = data.get('assignment')
        if not isinstance(entries, list):
            raise GapFormatError("grid manifest needs an 'assignment' list or an 'id_template'", path)

        assignment: Dict[Tuple[Any, ...], str] = {}
        for i, entry in enumerate(entries):
            if not isinstance(entry, dict) or 'id' not in entry or not isinstance(entry.get('values'), list):
                raise GapFormatError(f"assignment entry {i} needs 'id' and a 'values' list", path)
            try:
                key = tuple(entry['values'])
                duplicate = key in assignment
            except TypeError:
                raise GapFormatError(f"assignment entry {i} has a non-scalar value", path) from None
            if duplicate:
                raise GapDataError(f"combination {list(key)} is assigned twice (entry {i}, id '{entry['id']}')")
            assignment[key] = str(entry['id'])

        return GridManifest(parameters, assignment)

    except GapFormatError:
        raise
    except GapDataError as e:
        raise GapDataError(f"{path}: {e}") from None
    except (TypeError, ValueError, KeyError, IndexError, AttributeError, OverflowError) as e:
        raise GapFormatError(f"malformed grid manifest: {e}", path) from None


def read_schemes(path: str) -> List[SubsetScheme]:
    data = _load_yaml(path, 'scheme file')
    entries = data.get('schemes')
    if not isinstance(entries, list) or len(entries) == 0:
        raise GapFormatError("scheme file needs a nonempty 'schemes' list", path)

    schemes = []
    for i, entry in enumerate(entries):
        if not isinstance(entry, dict) or 'name' not in entry or not isinstance(entry.get('keep'), dict):
            raise GapFormatError(f"scheme entry {i} needs 'name' and a 'keep' mapping", path)
        schemes.append(SubsetScheme(str(entry['name']), entry['keep']))
    return schemes


def resolve_scheme(scheme: str, name: Optional[str] = None) -> SubsetScheme:
    """A builtin scheme name, or a scheme file (pick `name` when it holds several)."""
    builtins = {s.name: s for s in builtin_schemes()}
    if scheme in builtins:
        return builtins[scheme]

    if not os.path.isfile(scheme):
        raise GapSchemeError(f"unknown scheme '{scheme}': not a builtin ({', '.join(builtins)}) and not a file")

    schemes = read_schemes(scheme)
    if name is not None:
        for s in schemes:
            if s.name == name:
                return s
        raise GapSchemeError(f"scheme file {scheme} has no scheme '{name}' (has {', '.join(s.name for s in schemes)})")
    if len(schemes) > 1:
        raise GapSchemeError(f"scheme file {scheme} holds several schemes ({', '.join(s.name for s in schemes)}); choose one by name")
    return schemes[0]


def resolve_schemes(schemes: List[str]) -> List[SubsetScheme]:
    """Builtin names and scheme files; a file contributes all of its schemes."""
    builtins = {s.name: s for s in builtin_schemes()}
    resolved: List[SubsetScheme] = []
    for scheme in schemes:
        if scheme in builtins:
            resolved.append(builtins[scheme])
        elif os.path.isfile(scheme):
            resolved.extend(read_schemes(scheme))
        else:
            raise GapSchemeError(f"unknown scheme '{scheme}': not a builtin ({', '.join(builtins)}) and not a file")
    return resolved


def resolve_grid(grid: str) -> GridManifest:
    """A grid manifest file, or the name of a builtin grid."""
    if grid in BUILTIN_GRIDS and not os.path.isfile(grid):
        return BUILTIN_GRIDS[grid]()
    return read_grid_manifest(grid)
