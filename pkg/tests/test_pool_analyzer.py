import itertools, math
import numpy as np
import pytest

from gapkit.core import (GapDataError, GapDimensionError, GapSchemeError, GapUnknownIdError, FeatureSet, GridManifest, GridParameter,
                         AdjacencyPairs, SubsetScheme, DiversityConfig, archangel_grid, builtin_schemes)
from gapkit.stats import (expected_pair_count, adjacency_pairs, density, diversity, pool_domain_gap, distribution_gap,
                          frechet_gaussian, sample_subset, subset_grid, pool_properties, compare_subsets)

from tests.conftest import features, model, random_spd


def grid_of(*sizes, cyclic=()) -> GridManifest:
    parameters = [GridParameter(f"p{i}", list(range(s)), cyclic=i in cyclic) for i, s in enumerate(sizes)]
    return GridManifest.from_template(parameters, '-'.join(f"{{p{i}}}" for i in range(len(sizes))))


def enumerate_pairs(grid: GridManifest) -> set:
    """Brute force: every combination and its successor along each parameter."""
    pairs = set()
    shape = grid.shape
    for positions in itertools.product(*[range(s) for s in shape]):
        for axis, p in enumerate(grid.parameters):
            nxt = positions[axis] + 1
            if nxt == shape[axis]:
                if not (p.cyclic and shape[axis] > 2):
                    continue
                nxt = 0
            other = positions[:axis] + (nxt,) + positions[axis + 1:]
            pairs.add(frozenset((grid.idAt(positions), grid.idAt(other))))
    return pairs


def pool_for(grid: GridManifest, rows: np.ndarray) -> FeatureSet:
    return FeatureSet(grid.ids, rows)


# adjacency

def test_pairs_minimal():
    assert len(adjacency_pairs(grid_of(2))) == 1
    assert len(adjacency_pairs(grid_of(1))) == 0


def test_pairs_3x2():
    grid = grid_of(3, 2)
    pairs = adjacency_pairs(grid)
    assert len(pairs) == 7 == expected_pair_count(grid)
    assert {frozenset(p) for p in pairs} == enumerate_pairs(grid)


def test_pairs_closed_form(rng):
    for _ in range(100):
        sizes = [int(s) for s in rng.integers(1, 7, size=int(rng.integers(1, 6)))]
        grid = grid_of(*sizes)
        pairs = adjacency_pairs(grid)
        closed = sum((s - 1) * math.prod(sizes[:i] + sizes[i + 1:]) for i, s in enumerate(sizes))
        assert len(pairs) == closed == expected_pair_count(grid)
        assert {frozenset(p) for p in pairs} == enumerate_pairs(grid)


def test_pairs_cyclic():
    grid = grid_of(4, 2, cyclic=(0,))
    pairs = adjacency_pairs(grid)
    assert len(pairs) == 4 * 2 + 1 * 4 == expected_pair_count(grid)
    assert {frozenset(p) for p in pairs} == enumerate_pairs(grid)
    assert frozenset(('3-0', '0-0')) in {frozenset(p) for p in pairs}

    # two values never form a ring
    assert len(adjacency_pairs(grid_of(2, cyclic=(0,)))) == 1


def test_pairs_archangel():
    grid = archangel_grid()
    terms = [9 * (6 * 12 * 8 * 3), 5 * (10 * 12 * 8 * 3), 11 * (10 * 6 * 8 * 3), 7 * (10 * 6 * 12 * 3), 2 * (10 * 6 * 12 * 8)]
    assert terms == [15552, 14400, 15840, 15120, 11520]
    assert expected_pair_count(grid) == sum(terms) == 72432
    assert len(adjacency_pairs(grid)) == 72432


def test_adjacency_pairs_validation():
    with pytest.raises(GapDataError, match='self-pair'):
        AdjacencyPairs([('a', 'a')])
    with pytest.raises(GapDataError, match='twice'):
        AdjacencyPairs([('a', 'b'), ('b', 'a')])


# density

def test_density_constant_pool():
    grid = grid_of(3, 2)
    f = np.array([1.0, -2.0, 0.5])
    assert density(pool_for(grid, np.tile(f, (6, 1))), adjacency_pairs(grid)) == pytest.approx(f @ f, rel=1e-15)


def test_density_orthogonal():
    grid = grid_of(2)
    assert density(pool_for(grid, [[1.0, 0.0], [0.0, 1.0]]), adjacency_pairs(grid)) == 0.0


def test_density_oracle(rng):
    grid = grid_of(3, 2)
    pool = pool_for(grid, rng.normal(size=(6, 4)))
    pairs = adjacency_pairs(grid)
    expected = sum(float(pool.row(a) @ pool.row(b)) for a, b in pairs) / len(pairs)
    assert density(pool, pairs) == pytest.approx(expected, rel=1e-12)

    flipped = AdjacencyPairs([(b, a) for a, b in reversed(pairs.pairs)])
    assert density(pool, flipped) == density(pool, pairs)


def test_density_errors():
    grid = grid_of(2)
    pool = FeatureSet(['0'], [[1.0]])
    with pytest.raises(GapUnknownIdError, match="'1'"):
        density(pool, adjacency_pairs(grid))
    with pytest.raises(GapDataError):
        density(pool, AdjacencyPairs([]))


# diversity

def test_diversity_examples():
    assert diversity(features([(2.0, 3.0)] * 4)) == 0.0
    r = 1.5
    assert diversity(features([(r, 0.0), (-r, 0.0)])) == pytest.approx(r ** 10, rel=1e-12)


def test_diversity_trace_oracle(rng):
    for _ in range(100):
        X = rng.normal(scale=rng.uniform(0.1, 10.0), size=(int(rng.integers(2, 50)), int(rng.integers(1, 6))))
        expected = float(np.trace(np.cov(X.T, bias=True).reshape(X.shape[1], X.shape[1])))
        assert diversity(features(X), DiversityConfig(2.0)) == pytest.approx(expected, rel=1e-10)


def test_diversity_scaling(rng):
    X = rng.normal(size=(30, 3))
    mu = X.mean(axis=0)
    base = diversity(features(X))
    assert diversity(features(mu + 2.0 * (X - mu))) == pytest.approx(2.0 ** 10 * base, rel=1e-9)
    assert diversity(features(X + 100.0)) == pytest.approx(base, rel=1e-9)


def test_diversity_config():
    with pytest.raises(GapDataError):
        DiversityConfig(0.0)
    assert DiversityConfig().exponent == 10.0


# domain gap and frechet

def test_pool_domain_gap(rng):
    m = model(rng.normal(size=3), random_spd(rng, 3))
    assert pool_domain_gap(m, features([m.mean])) == 0.0
    pool = features(rng.normal(size=(25, 3)))
    assert pool_domain_gap(m, pool) == distribution_gap(m, pool)


def test_frechet_identical(rng):
    m = model(rng.normal(size=4), random_spd(rng, 4))
    assert frechet_gaussian(m, m) <= 1e-10


def test_frechet_closed_forms():
    a = model([0.0, 0.0], np.diag([1.0, 4.0]))
    b = model([0.0, 0.0], np.diag([4.0, 1.0]))
    assert frechet_gaussian(a, b) == pytest.approx(2.0, rel=1e-8)
    c = model([1.0, 2.0], np.diag([1.0, 4.0]))
    assert frechet_gaussian(a, c) == pytest.approx(5.0, rel=1e-8)


def test_frechet_symmetric(rng):
    for _ in range(20):
        a = model(rng.normal(size=5), random_spd(rng, 5))
        b = model(rng.normal(size=5), random_spd(rng, 5))
        assert frechet_gaussian(a, b) == pytest.approx(frechet_gaussian(b, a), rel=1e-8)


def test_frechet_dimension_mismatch():
    with pytest.raises(GapDimensionError):
        frechet_gaussian(model([0.0], [[1.0]]), model([0.0, 0.0], np.eye(2)))


# sub-pools

ARCHANGEL_COUNTS = {
    'SAlt': 8640, 'SRad': 8640, 'SAng': 8640, 'SCha': 8640, 'SPos': 5760, 'BSAlt': 8640,
    # value lists give these, not the published 5,760 and 6,912
    'BSRad': 8640, 'BSAng': 7200,
}


def test_archangel_subset_counts():
    grid = archangel_grid()
    assert len(sample_subset(grid, SubsetScheme('full', {}))) == 17280
    for scheme in builtin_schemes():
        assert len(sample_subset(grid, scheme)) == ARCHANGEL_COUNTS[scheme.name], scheme.name


def test_builtin_scheme_lists():
    schemes = {s.name: s for s in builtin_schemes()}
    assert len(schemes['SCha'].kept_values['character']) == 4
    assert schemes['BSAlt'].kept_values['altitude'] == [30, 35, 40, 45, 50]
    assert len(schemes['SAng'].kept_values['angle']) == 6


def test_subset_counts_multiply(rng):
    grid = grid_of(4, 3, 5)
    scheme = SubsetScheme('s', {'p0': [0, 3], 'p2': [1, 2, 4]})
    ids = sample_subset(grid, scheme)
    assert len(ids) == 2 * 3 * 3
    assert ids[0] == '0-0-1' and ids[-1] == '3-2-4'
    assert sample_subset(grid, SubsetScheme('one', {'p0': [1], 'p1': [2], 'p2': [0]})) == ['1-2-0']


def test_subset_scheme_errors():
    grid = grid_of(2, 2)
    with pytest.raises(GapSchemeError, match='unknown parameter'):
        sample_subset(grid, SubsetScheme('s', {'nope': [0]}))
    with pytest.raises(GapSchemeError, match='does not have'):
        sample_subset(grid, SubsetScheme('s', {'p0': [7]}))
    with pytest.raises(GapSchemeError):
        SubsetScheme('s', {'p0': []})


def test_scheme_matches_numbers_numerically():
    grid = archangel_grid()
    assert len(sample_subset(grid, SubsetScheme('s', {'altitude': [10.0], 'angle': ['30']}))) == 6 * 8 * 3


def angle_pair(a: int, b: int) -> frozenset:
    return frozenset((f"Juliet_stand_alt5_rad5_ang{a}", f"Juliet_stand_alt5_rad5_ang{b}"))


def test_subset_grid_keeps_scheme_order():
    schemes = {s.name: s for s in builtin_schemes()}
    sub = subset_grid(archangel_grid(), schemes['BSAng'])
    assert sub.parameters[2].values == (300, 330, 0, 30, 60)
    pairs = {frozenset(p) for p in adjacency_pairs(sub)}
    assert angle_pair(330, 0) in pairs
    assert angle_pair(60, 300) not in pairs
    assert len(pairs) == expected_pair_count(sub)

    # ids stay in grid order
    ids = sample_subset(archangel_grid(), schemes['BSAng'])
    assert [i for i in ids if i.startswith('Juliet_stand_alt5_rad5_')] == [
        f"Juliet_stand_alt5_rad5_ang{a}" for a in (0, 30, 60, 300, 330)]


def test_subset_grid_cyclic_arc():
    schemes = {s.name: s for s in builtin_schemes()}
    grid = archangel_grid(cyclic_angles=True)
    arc = subset_grid(grid, schemes['BSAng'])
    assert not arc.parameters[2].cyclic
    assert angle_pair(60, 300) not in {frozenset(p) for p in adjacency_pairs(arc)}

    sparse = subset_grid(grid, schemes['SAng'])
    assert sparse.parameters[2].cyclic
    assert angle_pair(300, 0) in {frozenset(p) for p in adjacency_pairs(sparse)}


# pool summary

def test_pool_properties(rng):
    grid = grid_of(3, 2)
    rows = rng.normal(size=(6, 2))
    extra = FeatureSet(grid.ids + ['spare'], np.vstack([rows, [[9.0, 9.0]]]))
    m = model(np.zeros(2), np.eye(2))
    props = pool_properties(m, extra, grid)
    assert props['n'] == 6 and props['pairs'] == 7
    members = pool_for(grid, rows)
    assert props['density'] == density(members, adjacency_pairs(grid))
    assert props['diversity'] == diversity(members)
    assert props['domain_gap'] == distribution_gap(m, members)

    table = compare_subsets(m, extra, grid, [SubsetScheme('half', {'p0': [0, 1]})])
    assert table[0]['name'] == 'half'
    assert table[0]['n'] == 4 and table[0]['pairs'] == 4
