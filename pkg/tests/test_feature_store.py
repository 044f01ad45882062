import json, os, struct
import numpy as np
import pytest

from gapkit.core import FeatureSet, GapError, GapDataError, GapFormatError, GapSchemeError
from gapkit.store import (read_csv, write_csv, read_binary, write_binary, read_features, write_features,
                          read_grid_manifest, read_schemes, resolve_scheme, resolve_schemes, resolve_grid,
                          save_model, load_model, read_per_item)
from gapkit.stats import fit_gaussian

from tests.conftest import features


def write(path, text: str) -> str:
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text)
    return str(path)


# csv

def test_read_csv(tmp_path):
    path = write(tmp_path / 'a.csv', "id,f0,f1,f2\na,1,2,3\nb,4,5,6.5\n")
    fset = read_csv(path)
    assert fset.n == 2 and fset.dim == 3
    assert not fset.hasScores
    assert fset.ids == ['a', 'b']
    np.testing.assert_array_equal(fset.rows, [[1, 2, 3], [4, 5, 6.5]])


def test_read_csv_scores(tmp_path):
    path = write(tmp_path / 'a.csv', "id,f0,score\na,1,0.25\nb,2,1\n")
    fset = read_csv(path)
    np.testing.assert_array_equal(fset.scores, [0.25, 1.0])


def test_read_csv_duplicate_id(tmp_path):
    path = write(tmp_path / 'a.csv', "id,f0\na,1\nb,2\na,3\n")
    with pytest.raises(GapFormatError) as e:
        read_csv(path)
    assert "'a'" in str(e.value)
    assert "2" in str(e.value) and "4" in str(e.value)


def test_read_csv_score_out_of_range(tmp_path):
    path = write(tmp_path / 'a.csv', "id,f0,score\na,1,0.5\nb,2,1.5\n")
    with pytest.raises(GapFormatError) as e:
        read_csv(path)
    assert e.value.row == 3
    assert "1.5" in str(e.value)


@pytest.mark.parametrize('body, fragment', [
    ("id,f0,f1\na,1\n", "ragged"),
    ("id,f0\na,x\n", "non-numeric"),
    ("id,f0\n,1\n", "missing id"),
    ("id,f0\na,nan\n", "non-finite"),
    ("id,f0\na,1_0\n", "non-numeric"),
    ("id,g0\na,1\n", "f0"),
    ("", "empty"),
])
def test_read_csv_malformed(tmp_path, body, fragment):
    path = write(tmp_path / 'a.csv', body)
    with pytest.raises(GapFormatError, match=fragment):
        read_csv(path)


def test_csv_write_read(tmp_path, rng):
    fset = features(rng.normal(size=(5, 3)), scores=rng.uniform(size=5))
    path = str(tmp_path / 'a.csv')
    write_csv(fset, path)
    assert read_features(path) == fset
    assert 'x4' in fset and 'x5' not in fset

    binary = str(tmp_path / 'a.bin')
    write_features(fset, binary)
    with open(binary, 'rb') as f:
        assert f.read(4) == b'FSET'


# binary

def test_binary_round_trip(tmp_path, rng):
    fset = FeatureSet([f"img_{i:03d}" for i in range(10)], rng.normal(size=(10, 4)), rng.uniform(size=10))
    path = str(tmp_path / 'a.fset')
    write_binary(fset, path)
    back = read_binary(path)
    assert back.ids == fset.ids
    assert back.rows.tobytes() == fset.rows.tobytes()
    assert back.scores.tobytes() == fset.scores.tobytes()


def test_binary_bad_magic(tmp_path, rng):
    path = str(tmp_path / 'a.fset')
    write_binary(features(rng.normal(size=(3, 2))), path)
    with open(path, 'r+b') as f:
        f.write(b'XXXX')
    with pytest.raises(GapFormatError, match='bad magic'):
        read_binary(path)


def test_binary_truncated(tmp_path, rng):
    path = str(tmp_path / 'a.fset')
    write_binary(features(rng.normal(size=(100, 2))), path)
    with open(path, 'rb') as f:
        data = f.read()
    with open(path, 'wb') as f:
        f.write(data[:28 + 50 * 2 * 8])
    with pytest.raises(GapFormatError, match='truncated'):
        read_binary(path)


def test_binary_version_mismatch(tmp_path, rng):
    path = str(tmp_path / 'a.fset')
    write_binary(features(rng.normal(size=(3, 2))), path)
    with open(path, 'r+b') as f:
        f.seek(4)
        f.write(struct.pack('<I', 7))
    with pytest.raises(GapFormatError, match='version'):
        read_binary(path)


def test_binary_checksum(tmp_path, rng):
    path = str(tmp_path / 'a.fset')
    write_binary(features(rng.normal(size=(3, 2))), path)
    with open(path, 'r+b') as f:
        f.seek(28)
        f.write(struct.pack('<d', 123.0))
    with pytest.raises(GapFormatError, match='checksum'):
        read_binary(path)


def test_binary_without_ids(tmp_path):
    import zlib
    rows = np.arange(6, dtype='<f8')
    body = rows.tobytes()
    path = str(tmp_path / 'a.fset')
    with open(path, 'wb') as f:
        f.write(struct.pack('<4sIIQQ', b'FSET', 1, 0, 3, 2))
        f.write(body)
        f.write(struct.pack('<I', zlib.crc32(body) & 0xFFFFFFFF))
    fset = read_binary(path)
    assert fset.ids == ['0', '1', '2']
    np.testing.assert_array_equal(fset.rows, rows.reshape(3, 2))


def test_read_features_missing(tmp_path):
    with pytest.raises(GapFormatError, match='not found'):
        read_features(str(tmp_path / 'nope.csv'))


# grid manifests and schemes

GRID_2x3 = """
parameters:
  - name: pose
    values: [stand, prone]
  - name: altitude
    values: [10, 20, 30]
assignment:
  - {id: a, values: [stand, 10]}
  - {id: b, values: [stand, 20]}
  - {id: c, values: [stand, 30]}
  - {id: d, values: [prone, 10]}
  - {id: e, values: [prone, 20]}
"""


def test_read_grid_manifest(tmp_path):
    path = write(tmp_path / 'g.yml', GRID_2x3 + "  - {id: f, values: [prone, 30]}\n")
    grid = read_grid_manifest(path)
    assert grid.shape == (2, 3)
    assert grid.ids == ['a', 'b', 'c', 'd', 'e', 'f']
    assert grid.idAt((1, 2)) == 'f'


def test_read_grid_manifest_count_mismatch(tmp_path):
    path = write(tmp_path / 'g.yml', GRID_2x3)
    with pytest.raises(GapDataError, match='6 combinations but 5'):
        read_grid_manifest(path)


def test_read_grid_manifest_not_injective(tmp_path):
    path = write(tmp_path / 'g.yml', GRID_2x3 + "  - {id: a, values: [prone, 30]}\n")
    with pytest.raises(GapDataError, match="id 'a' is assigned to two"):
        read_grid_manifest(path)


def test_read_grid_manifest_template(toy):
    grid = read_grid_manifest(os.path.join(toy, 'grid.yml'))
    assert grid.names == ['altitude', 'pose']
    assert grid.ids[:2] == ['alt10_stand', 'alt10_prone']


def test_schemes_file(tmp_path):
    path = write(tmp_path / 's.yml', "schemes:\n  - name: low\n    keep: {altitude: [10]}\n  - name: high\n    keep: {altitude: [30]}\n")
    assert [s.name for s in read_schemes(path)] == ['low', 'high']
    assert resolve_scheme(path, 'high').kept_values == {'altitude': [30]}
    assert len(resolve_schemes(['SPos', path])) == 3
    with pytest.raises(GapSchemeError, match='several'):
        resolve_scheme(path)


def test_unknown_scheme_lists_builtins():
    with pytest.raises(GapSchemeError) as e:
        resolve_scheme('SFoo')
    assert 'SAlt' in str(e.value) and 'BSAng' in str(e.value)


def test_builtin_grid():
    assert resolve_grid('archangel').size == 17280


# models and per-item lists

def test_model_save_load(tmp_path, rng):
    model = fit_gaussian(features(rng.normal(size=(50, 3))))
    path = str(tmp_path / 'model.json')
    save_model(model, path)
    back = load_model(path)
    assert back == model
    np.testing.assert_array_equal(back.chol, model.chol)
    with open(path) as f:
        assert json.load(f)['diagnostics']['n'] == 50


def test_model_not_a_model(tmp_path):
    path = write(tmp_path / 'm.json', '{"format": "other"}')
    with pytest.raises(GapFormatError):
        load_model(path)


def test_read_per_item(tmp_path):
    csv_path = write(tmp_path / 'p.csv', "id,mahalanobis_sq\na,1.5\nb,0\n")
    json_path = write(tmp_path / 'r.json', json.dumps({'per_sample': [['a', 1.5], ['b', 0.0]]}))
    assert read_per_item(csv_path) == [('a', 1.5), ('b', 0.0)]
    assert read_per_item(json_path) == read_per_item(csv_path)

    bad = write(tmp_path / 'bad.csv', "id,mahalanobis_sq\na,inf\n")
    with pytest.raises(GapFormatError, match='non-finite'):
        read_per_item(bad)


# malformed bytes never escape as untyped exceptions

def test_per_item_invalid_utf8(tmp_path):
    path = tmp_path / 'p.csv'
    path.write_bytes(b'id,mahalanobis_sq\n\xff\xfe,1.0\n')
    with pytest.raises(GapFormatError):
        read_per_item(str(path))
    with pytest.raises(GapFormatError, match='non-numeric'):
        read_per_item(write(tmp_path / 'u.csv', "id,mahalanobis_sq\na,1_0\n"))


def test_model_scalar_mean(tmp_path, rng):
    path = str(tmp_path / 'model.json')
    save_model(fit_gaussian(features(rng.normal(size=(10, 2)))), path)
    with open(path) as f:
        document = json.load(f)
    document['mean'] = 5
    write(path, json.dumps(document))
    with pytest.raises(GapFormatError, match='dim=2'):
        load_model(path)


def test_yaml_invalid_utf8(tmp_path):
    path = tmp_path / 'g.yml'
    path.write_bytes(b'parameters:\n  - name: \xff\xfe\n')
    with pytest.raises(GapFormatError):
        read_grid_manifest(str(path))
    with pytest.raises(GapFormatError):
        read_schemes(str(path))


def mutate(data: bytes, rng) -> bytes:
    """Overwrite, truncate, insert or delete a few random bytes."""
    data = bytearray(data)
    kind = int(rng.integers(4))
    if kind == 0 and data:
        for _ in range(int(rng.integers(1, 4))):
            data[int(rng.integers(len(data)))] = int(rng.integers(256))
    elif kind == 1:
        del data[int(rng.integers(len(data) + 1)):]
    elif kind == 2:
        at = int(rng.integers(len(data) + 1))
        data[at:at] = bytes(int(b) for b in rng.integers(256, size=int(rng.integers(1, 8))))
    elif data:
        at = int(rng.integers(len(data)))
        del data[at:at + int(rng.integers(1, 8))]
    return bytes(data)


def reader_inputs(tmp_path):
    fset = FeatureSet(['a', 'b', 'c'], [[1.0, 2.0], [0.5, -1.0], [3.0, 0.25]], [0.9, 0.1, 0.5])
    write_binary(fset, str(tmp_path / 'seed.fset'))
    save_model(fit_gaussian(FeatureSet(['a', 'b', 'c', 'd'], [[1.0, 0.0], [0.0, 1.0], [-1.0, 0.5], [0.5, -0.5]])), str(tmp_path / 'seed.json'))
    return {
        'csv': (read_csv, '.csv', b"id,f0,f1,score\na,1.0,2.0,0.9\nb,0.5,-1e-3,0.1\nc,3,0.25,0.5\n"),
        'binary': (read_binary, '.fset', (tmp_path / 'seed.fset').read_bytes()),
        'grid': (read_grid_manifest, '.yml', (GRID_2x3 + "  - {id: f, values: [prone, 30]}\n").encode()),
        'template': (read_grid_manifest, '.yml', b'parameters:\n  - {name: altitude, values: [10, 20], cyclic: false}\n  - {name: pose, values: [stand, prone]}\nid_template: "alt{altitude}_{pose}"\n'),
        'schemes': (read_schemes, '.yml', b"schemes:\n  - name: low\n    keep: {altitude: [10, 20]}\n"),
        'per_item_csv': (read_per_item, '.csv', b"id,mahalanobis_sq\na,1.5\nb,0.25\n"),
        'per_item_json': (read_per_item, '.json', b'{"per_sample": [["a", 1.5], ["b", 0.25]]}'),
        'model': (load_model, '.json', (tmp_path / 'seed.json').read_bytes()),
    }


READER_KINDS = ['csv', 'binary', 'grid', 'template', 'schemes', 'per_item_csv', 'per_item_json', 'model']


@pytest.mark.parametrize('kind', READER_KINDS)
def test_readers_raise_typed_errors_only(tmp_path, kind):
    reader, suffix, seed = reader_inputs(tmp_path)[kind]
    rng = np.random.default_rng([20240517, READER_KINDS.index(kind)])
    path = tmp_path / f"mutated{suffix}"
    for _ in range(300):
        path.write_bytes(mutate(seed, rng))
        try:
            reader(str(path))
        except GapError:
            pass
