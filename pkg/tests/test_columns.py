import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from griddraw.columns import (
    degree_partition,
    embed_on_columns,
    locate_on_columns,
    lovasz_partition,
    lovasz_potential,
    partition_from_located,
    split_path_colors,
    transfer_to_plane,
)
from griddraw.generators import (
    complete,
    cycle,
    path,
    petersen,
    random_bounded_degree,
    random_graph,
    random_maximal_planar,
    random_path_partitioned,
)
from griddraw.graph import NORMAL, PATH, Graph, PartClass, VertexPartition, validate_partition
from griddraw.lattice import segment_gcd
from griddraw.mixed import MixedSpec, mixed_color
from griddraw.verify import GridDrawing, column_ranks, gp, is_valid_drawing
from oracles import drawing_valid, linear_forest

seeds = st.integers(0, 10**6)


def _columns_of(dr):
    return {r: vs for r, vs in column_ranks(dr).items()}


def test_embed_examples():
    dr = embed_on_columns(path(4), VertexPartition.of((PATH, range(4))))
    assert dr.points == ((0, 0), (0, 1), (0, 2), (0, 3))
    k4 = embed_on_columns(complete(4), VertexPartition.of((PATH, {0, 1}), (PATH, {2, 3})))
    assert is_valid_drawing(k4) and len(column_ranks(k4)) == 2


def test_embed_planar_graph_on_three_columns():
    rng = random.Random(7)
    g = random_maximal_planar(14, rng)
    c = mixed_color(g, MixedSpec(0, 3))
    p = VertexPartition(tuple(PartClass(PATH, frozenset(v for v in range(g.n) if c[v] == i)) for i in range(3)))
    dr = embed_on_columns(g, p)
    assert is_valid_drawing(dr)
    assert set(column_ranks(dr)) <= {(0,), (1,), (2,)}


def test_embed_rejects_invalid_partition():
    with pytest.raises(ValueError):
        embed_on_columns(cycle(4), VertexPartition.of((PATH, range(4))))


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_embed_random_partitions(seed):
    rng = random.Random(seed)
    l = rng.randint(1, 4)
    g, p = random_path_partitioned(rng.randint(l, 10), l, rng)
    dr = embed_on_columns(g, p)
    assert drawing_valid(g, dr.points)
    ranks = column_ranks(dr)
    assert sorted(ranks) == [(i,) for i in range(l)]
    for i, cls in enumerate(p.classes):
        assert ranks[(i,)] == set(cls.vertices)
    for u, v in g.edges:
        cu, cv = dr.points[u], dr.points[v]
        if cu[0] == cv[0]:
            assert abs(cu[1] - cv[1]) == 1


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_columns_of_any_valid_drawing_are_linear_forests(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 7)
    g = random_graph(n, 0.5, rng)
    pts = rng.sample([(x, y) for x in range(3) for y in range(4)], n)
    if not drawing_valid(g, pts):
        return
    for verts in column_ranks(GridDrawing(g, tuple(pts))).values():
        assert linear_forest(g, verts)


def test_locate_k5_three_columns_z3():
    p = VertexPartition.of((PATH, {0, 1}), (PATH, {2, 3}), (PATH, {4}))
    dr = locate_on_columns(complete(5), p, 3)
    assert dr.dim == 3 and gp(dr) == 2 and is_valid_drawing(dr)
    assert len(column_ranks(dr)) == 3


def test_locate_k4_two_columns():
    dr = locate_on_columns(complete(4), VertexPartition.of((PATH, {0, 1}), (PATH, {2, 3})), 2)
    assert gp(dr) == 2 and len(column_ranks(dr)) == 2


def _random_locatable(rng, d):
    """Graph plus a partition meeting the class budget, built class by class."""
    l = rng.randint(2 ** (d - 1) + 1, 2 ** d)
    n_paths = rng.randint(0, 2 ** d - l)
    kinds = [PATH] * n_paths + [NORMAL] * (l - n_paths)
    rng.shuffle(kinds)
    n = rng.randint(l, l + 8)
    labels = list(range(l)) + [rng.randrange(l) for _ in range(n - l)]
    rng.shuffle(labels)
    edges = set()
    for u, v in itertools.combinations(range(n), 2):
        if labels[u] != labels[v] and rng.random() < 0.5:
            edges.add((u, v))
    for i in range(l):
        if kinds[i] == PATH:
            members = [v for v in range(n) if labels[v] == i]
            edges.update((a, b) if a < b else (b, a) for a, b in zip(members, members[1:]) if rng.random() < 0.8)
    classes = tuple(PartClass(kinds[i], frozenset(v for v in range(n) if labels[v] == i)) for i in range(l))
    return Graph(n, frozenset(edges)), VertexPartition(classes)


@settings(max_examples=80, deadline=None)
@given(seeds, st.sampled_from([2, 3, 4]))
def test_locate_random_is_primitive(seed, d):
    rng = random.Random(seed)
    g, p = _random_locatable(rng, d)
    dr = locate_on_columns(g, p, d)
    assert dr.dim == d
    assert all(segment_gcd(dr.points[u], dr.points[v]) == 1 for u, v in g.edges)
    assert drawing_valid(g, dr.points) if d == 2 else is_valid_drawing(dr)
    ranks = column_ranks(dr)
    assert len(ranks) == len(p)
    assert all(r[0] in range(4) and all(x in (0, 1) for x in r[1:]) for r in ranks)
    # round trip through the congruence argument
    back = partition_from_located(dr, d, len(p))
    assert validate_partition(g, back) and len(back) == len(p)
    assert back.count(PATH) <= 2 ** d - len(p)


def test_locate_one_path_two_normals_in_plane():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(3, 12)
        labels = [0, 1, 2] + [rng.randrange(3) for _ in range(n - 3)]
        edges = {(u, v) for u, v in itertools.combinations(range(n), 2) if labels[u] != labels[v] and rng.random() < 0.6}
        g = Graph(n, frozenset(edges))
        p = VertexPartition.of((PATH, [v for v in range(n) if labels[v] == 0]),
                               (NORMAL, [v for v in range(n) if labels[v] == 1]),
                               (NORMAL, [v for v in range(n) if labels[v] == 2]))
        dr = locate_on_columns(g, p, 2)
        assert gp(dr) == (2 if g.edges else 0) and is_valid_drawing(dr)


def test_locate_rejects_budget_violations():
    p = VertexPartition.of((PATH, {0, 1}), (PATH, {2, 3}), (PATH, {4}))
    with pytest.raises(ValueError):
        locate_on_columns(complete(5), p, 2)
    with pytest.raises(ValueError):
        locate_on_columns(complete(5), VertexPartition.of(*[(NORMAL, {i}) for i in range(5)]), 2)


def test_partition_from_two_column_k4():
    dr = GridDrawing(complete(4), ((0, 0), (0, 1), (1, 0), (1, 1)))
    p = partition_from_located(dr, 2, 2)
    assert len(p) == 2 and p.count(PATH) == 2 and validate_partition(complete(4), p)


def test_partition_congruent_columns_become_normal():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    dr = GridDrawing(g, ((0, 0), (1, 0), (2, 1), (3, 0)))
    # ranks 0 and 2 agree mod 2, so are 1 and 3
    p = partition_from_located(dr, 2, 4)
    assert p.count(PATH) == 0 and len(p) == 4 and validate_partition(g, p)


def test_partition_parity_classes_are_independent_exhaustively():
    # in a primitive drawing, two points agreeing mod 2 everywhere are never adjacent
    pts = [(x, y) for x in range(4) for y in range(4)]
    for a, b in itertools.combinations(pts, 2):
        if all((s - t) % 2 == 0 for s, t in zip(a, b)):
            assert segment_gcd(a, b) != 1


def test_partition_rejects_non_primitive():
    dr = GridDrawing(complete(2), ((0, 0), (0, 2)))
    with pytest.raises(ValueError):
        partition_from_located(dr, 2, 1)


def test_split_examples():
    g, p = random_path_partitioned(10, 3, random.Random(1))
    out = split_path_colors(p, g, 2)
    assert 3 <= len(out) <= 4 and validate_partition(g, out)
    two = VertexPartition.of((PATH, {0, 1}), (PATH, {2, 3}))
    assert split_path_colors(two, complete(4), 2) == two
    with pytest.raises(ValueError):
        split_path_colors(VertexPartition.of(*[(PATH, {i}) for i in range(5)]), Graph(5), 2)


@settings(max_examples=50, deadline=None)
@given(seeds, st.sampled_from([2, 3]))
def test_split_then_locate_one_dimension_up(seed, d):
    rng = random.Random(seed)
    l = rng.randint(2 ** (d - 1) + 1, 2 ** d)
    g, p = random_path_partitioned(rng.randint(l, 12), l, rng)
    out = split_path_colors(p, g, d)
    assert validate_partition(g, out)
    assert l <= len(out) <= 2 * l - 2 ** (d - 1)
    dr = locate_on_columns(g, out, d + 1)
    assert all(segment_gcd(dr.points[u], dr.points[v]) == 1 for u, v in g.edges)


def test_transfer_examples():
    p = VertexPartition.of((PATH, {0, 1}), (PATH, {2, 3}), (PATH, {4}))
    flat = transfer_to_plane(locate_on_columns(complete(5), p, 3))
    assert flat.dim == 2 and is_valid_drawing(flat)
    assert sorted(column_ranks(flat)) == [(0,), (1,), (2,)]
    one = GridDrawing(path(3), ((5, 7, 2), (5, 7, 3), (5, 7, 4)))
    assert transfer_to_plane(one).points == ((0, 0), (0, 1), (0, 2))


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_transfer_random_located(seed):
    rng = random.Random(seed)
    g, p = _random_locatable(rng, 3)
    flat = transfer_to_plane(locate_on_columns(g, p, 3))
    assert drawing_valid(g, flat.points)
    assert len(column_ranks(flat)) == len(p)


def test_lovasz_examples():
    parts = lovasz_partition(cycle(5), [1, 1])
    assert all(max((sum(1 for u in cycle(5).adj[v] if u in s) for v in s), default=0) <= 1 for s in parts)
    a, b = lovasz_partition(complete(3), [1, 0])
    assert len(a) == 2 and len(b) == 1
    assert sum(len(s) for s in lovasz_partition(Graph(5), [0, 0])) == 5
    with pytest.raises(ValueError):
        lovasz_partition(complete(5), [1, 1])


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_lovasz_random(seed):
    rng = random.Random(seed)
    g = random_graph(rng.randint(1, 16), rng.random(), rng)
    m = rng.randint(1, 4)
    need = max(g.max_degree() - m + 1, 0)
    ks = [0] * m
    for _ in range(need + rng.randint(0, 2)):
        ks[rng.randrange(m)] += 1
    parts, moves = lovasz_partition(g, ks, with_moves=True)
    assert sorted(v for s in parts for v in s) == list(range(g.n))
    for s, k in zip(parts, ks):
        assert all(sum(1 for u in g.adj[v] if u in s) <= k for v in s)
    start = [frozenset(range(g.n))] + [frozenset()] * (m - 1)
    floor = -sum(ks) * g.n
    assert moves <= lovasz_potential(g, start, ks) - max(lovasz_potential(g, parts, ks), floor)


def test_degree_partition_examples():
    p = degree_partition(complete(4), 1)
    assert len(p) == 2 and sorted(len(c.vertices) for c in p.classes) == [2, 2]
    pet = degree_partition(petersen(), 1)
    assert len(pet) == 2 and all(linear_forest(petersen(), c.vertices) for c in pet.classes)
    with pytest.raises(ValueError):
        degree_partition(complete(5), 1)


@settings(max_examples=60, deadline=None)
@given(seeds, st.sampled_from([1, 2]))
def test_degree_partition_random(seed, d):
    rng = random.Random(seed)
    g = random_bounded_degree(rng.randint(1, 24), 2 ** (d + 1) - 1, rng)
    p = degree_partition(g, d)
    assert len(p) == 2 ** d and p.count(PATH) == 2 ** d
    assert all(linear_forest(g, c.vertices) for c in p.classes)
    assert sorted(v for c in p.classes for v in c.vertices) == list(range(g.n))
