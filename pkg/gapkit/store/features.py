"""
-------------------------------------------------
gapkit - FeatureSet readers and writers
-------------------------------------------------

CSV     UTF-8, ',' separated, header
        `id,f0,...,f{d-1}[,score]`

FSET    little-endian binary
        magic  'FSET'          4 bytes
        version u32 = 1
        flags   u32            bit0 scores, bit1 ids
        n       u64
        d       u64
        rows    n*d f64        row-major
        scores  n f64          if bit0
        ids     n x (u32 length, utf-8 bytes)  if bit1
        crc32   u32            over rows, scores, ids
-------------------------------------------------
"""

from typing import List, Optional
import csv, os, struct, zlib
import numpy as np

from gapkit.core.Error import GapDataError, GapFormatError
from gapkit.core.FeatureSet import FeatureSet
from gapkit.core.FileType import FileType

MAGIC = b'FSET'
VERSION = 1
FLAG_SCORES = 0x1
FLAG_IDS = 0x2
HEADER = struct.Struct('<4sIIQQ')
CRC = struct.Struct('<I')
ID_LEN = struct.Struct('<I')


def _parse_header(path: str, header: List[str]) -> tuple:
    if len(header) < 2 or header[0] != 'id':
        raise GapFormatError("header must start with 'id' followed by feature columns f0, f1, ...", path, 1)
    has_score = header[-1] == 'score'
    features = header[1:-1] if has_score else header[1:]
    if len(features) == 0:
        raise GapFormatError("header names no feature columns", path, 1)
    for i, name in enumerate(features):
        if name != f"f{i}":
            raise GapFormatError(f"expected column 'f{i}' but found '{name}'", path, 1)
    return len(features), has_score


def read_csv(path: str) -> FeatureSet:
    """Read and validate a feature CSV; errors name the file line (header is line 1)."""
    try:
        f = open(path, 'r', encoding='utf-8', newline='')
    except OSError as e:
        raise GapFormatError(f"cannot open feature file: {e.strerror}", path) from None

    with f:
        reader = csv.reader(f)
        try:
            header = next(reader)
        except StopIteration:
            raise GapFormatError("file is empty, a header row is required", path) from None
        except (csv.Error, UnicodeDecodeError) as e:
            raise GapFormatError(f"unreadable header: {e}", path, 1) from None

        d, has_score = _parse_header(path, [h.strip() for h in header])
        width = 1 + d + (1 if has_score else 0)

        ids: List[str] = []
        rows: List[List[float]] = []
        scores: List[float] = []
        first_line: dict = {}

        line = 1
        while True:
            try:
                record = next(reader)
            except StopIteration:
                break
            except (csv.Error, UnicodeDecodeError) as e:
                raise GapFormatError(f"unreadable row: {e}", path, line + 1) from None
            line = reader.line_num

            if len(record) == 0:
                continue
            if len(record) != width:
                raise GapFormatError(f"ragged row: expected {width} cells, found {len(record)}", path, line)

            id = record[0].strip()
            if id == '':
                raise GapFormatError("missing id", path, line)
            if id in first_line:
                raise GapFormatError(f"duplicate id '{id}' (rows {first_line[id]} and {line})", path, line)
            first_line[id] = line

            values = []
            for col, cell in enumerate(record[1:], start=1):
                try:
                    # plain '.'-decimal numbers only; float() also takes '1_0'
                    if '_' in cell:
                        raise ValueError(cell)
                    value = float(cell.strip())
                except ValueError:
                    raise GapFormatError(f"non-numeric cell '{cell}' in column '{header[col].strip()}'", path, line) from None
                if not np.isfinite(value):
                    raise GapFormatError(f"non-finite value '{cell}' in column '{header[col].strip()}'", path, line)
                values.append(value)

            if has_score:
                score = values.pop()
                if not (0.0 <= score <= 1.0):
                    raise GapFormatError(f"score {score} outside [0, 1]", path, line)
                scores.append(score)

            ids.append(id)
            rows.append(values)

    matrix = np.array(rows, dtype=np.float64).reshape(len(rows), d)
    return FeatureSet(ids, matrix, scores if has_score else None)


def write_csv(fset: FeatureSet, path: str) -> None:
    header = ['id'] + [f"f{i}" for i in range(fset.dim)] + (['score'] if fset.hasScores else [])
    with open(path, 'w', encoding='utf-8', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(header)
        for i, id in enumerate(fset.ids):
            row = [id] + [repr(v) for v in fset.rows[i].tolist()]
            if fset.scores is not None:
                row.append(repr(float(fset.scores[i])))
            writer.writerow(row)


def write_binary(fset: FeatureSet, path: str) -> None:
    flags = FLAG_IDS | (FLAG_SCORES if fset.hasScores else 0)
    payload = [fset.rows.astype('<f8').tobytes(order='C')]
    if fset.scores is not None:
        payload.append(fset.scores.astype('<f8').tobytes())
    for id in fset.ids:
        raw = id.encode('utf-8')
        payload.append(ID_LEN.pack(len(raw)))
        payload.append(raw)
    body = b''.join(payload)

    with open(path, 'wb') as f:
        f.write(HEADER.pack(MAGIC, VERSION, flags, fset.n, fset.dim))
        f.write(body)
        f.write(CRC.pack(zlib.crc32(body) & 0xFFFFFFFF))


def read_binary(path: str) -> FeatureSet:
    try:
        with open(path, 'rb') as f:
            data = f.read()
    except OSError as e:
        raise GapFormatError(f"cannot open feature file: {e.strerror}", path) from None

    if len(data) < HEADER.size:
        if len(data) >= 4 and data[:4] != MAGIC:
            raise GapFormatError(f"bad magic {data[:4]!r}, expected {MAGIC!r}", path)
        raise GapFormatError(f"truncated header: {len(data)} of {HEADER.size} bytes", path)

    magic, version, flags, n, d = HEADER.unpack_from(data, 0)
    if magic != MAGIC:
        raise GapFormatError(f"bad magic {magic!r}, expected {MAGIC!r}", path)
    if version != VERSION:
        raise GapFormatError(f"unsupported version {version}, expected {VERSION}", path)
    if flags & ~(FLAG_SCORES | FLAG_IDS):
        raise GapFormatError(f"unknown flag bits 0x{flags:x}", path)
    if d < 1:
        raise GapFormatError("feature dimension is 0", path)

    has_scores = bool(flags & FLAG_SCORES)
    has_ids = bool(flags & FLAG_IDS)
    fixed = n * d * 8 + (n * 8 if has_scores else 0)
    available = len(data) - HEADER.size - CRC.size
    if fixed > available:
        raise GapFormatError(f"truncated payload: header declares n={n}, d={d} ({fixed} bytes) but only {max(available, 0)} bytes follow", path)

    offset = HEADER.size
    rows = np.frombuffer(data, dtype='<f8', count=n * d, offset=offset).reshape(n, d).astype(np.float64)
    offset += n * d * 8

    scores: Optional[np.ndarray] = None
    if has_scores:
        scores = np.frombuffer(data, dtype='<f8', count=n, offset=offset).astype(np.float64)
        offset += n * 8

    end = len(data) - CRC.size
    if has_ids:
        ids: List[str] = []
        for i in range(n):
            if offset + ID_LEN.size > end:
                raise GapFormatError(f"truncated id block at id {i} of {n}", path)
            (length,) = ID_LEN.unpack_from(data, offset)
            offset += ID_LEN.size
            if offset + length > end:
                raise GapFormatError(f"truncated id block at id {i} of {n}", path)
            try:
                ids.append(data[offset:offset + length].decode('utf-8'))
            except UnicodeDecodeError:
                raise GapFormatError(f"id {i} is not valid UTF-8", path) from None
            offset += length
    else:
        ids = [str(i) for i in range(n)]

    if offset != end:
        raise GapFormatError(f"{end - offset} unexpected bytes before the checksum", path)

    (stored,) = CRC.unpack_from(data, end)
    actual = zlib.crc32(data[HEADER.size:end]) & 0xFFFFFFFF
    if stored != actual:
        raise GapFormatError(f"checksum mismatch: stored 0x{stored:08x}, computed 0x{actual:08x}", path)

    try:
        return FeatureSet(ids, rows, scores)
    except GapFormatError:
        raise
    except GapDataError as e:
        raise GapFormatError(str(e), path) from None


def read_features(path: str) -> FeatureSet:
    """Dispatch on the file extension: .csv → CSV, anything else must be FSET binary."""
    if not os.path.isfile(path):
        raise GapFormatError("feature file not found", path)
    if FileType.fromPath(path) == FileType.CSV:
        return read_csv(path)
    return read_binary(path)


def write_features(fset: FeatureSet, path: str) -> None:
    if FileType.fromPath(path) == FileType.CSV:
        write_csv(fset, path)
    else:
        write_binary(fset, path)
