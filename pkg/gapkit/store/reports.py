"""
-------------------------------------------------
gapkit - per-item distance lists
         (input of the selection simulator)
-------------------------------------------------

Accepted inputs:
  - a gap report JSON (its `per_sample` list)
  - a CSV with header `id,mahalanobis_sq`
-------------------------------------------------
"""

from typing import List, Tuple
import csv, json, math, os

from gapkit.core.Error import GapFormatError
from gapkit.core.FileType import FileType

PER_ITEM_HEADER = ['id', 'mahalanobis_sq']


def read_per_item(path: str) -> List[Tuple[str, float]]:
    if not os.path.isfile(path):
        raise GapFormatError("per-item file not found", path)

    if FileType.fromPath(path) == FileType.JSON:
        try:
            with open(path, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except (json.JSONDecodeError, UnicodeDecodeError) as e:
            raise GapFormatError(f"invalid JSON: {e}", path) from None
        entries = data.get('per_sample') if isinstance(data, dict) else None
        if not isinstance(entries, list):
            raise GapFormatError("JSON document has no 'per_sample' list", path)
        items = []
        for i, entry in enumerate(entries):
            if not isinstance(entry, list) or len(entry) != 2:
                raise GapFormatError(f"per_sample entry {i} must be [id, mahalanobis_sq]", path)
            items.append((str(entry[0]), _number(entry[1], path, i + 1)))
        return items

    items = []
    try:
        with open(path, 'r', encoding='utf-8', newline='') as f:
            reader = csv.reader(f)
            header = next(reader, None)
            if header is None or [h.strip() for h in header] != PER_ITEM_HEADER:
                raise GapFormatError(f"header must be {','.join(PER_ITEM_HEADER)}", path, 1)
            for record in reader:
                if len(record) == 0:
                    continue
                if len(record) != 2:
                    raise GapFormatError(f"expected 2 cells, found {len(record)}", path, reader.line_num)
                items.append((record[0].strip(), _number(record[1], path, reader.line_num)))
    except (csv.Error, UnicodeDecodeError) as e:
        raise GapFormatError(f"unreadable CSV: {e}", path) from None
    return items


def _number(value, path: str, row: int) -> float:
    # float() also takes '1_0'
    if isinstance(value, str) and '_' in value:
        raise GapFormatError(f"non-numeric distance '{value}'", path, row)
    try:
        v = float(value)
    except (TypeError, ValueError, OverflowError):
        raise GapFormatError(f"non-numeric distance '{value}'", path, row) from None
    if not math.isfinite(v):
        raise GapFormatError(f"non-finite distance '{value}'", path, row)
    return v
