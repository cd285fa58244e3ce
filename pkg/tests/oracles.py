"""Reference implementations used only by the tests.

Each one is deliberately naive and shares no code with the package: a
bounding-box scan for lattice points, enumeration for colorings, networkx
for graph structure, and Fraction parametrics for segment geometry.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

import networkx as nx


def box_scan(a, b):
    """Every lattice point of the closed segment ab, found by scanning the bounding box."""
    ranges = [range(min(x, y), max(x, y) + 1) for x, y in zip(a, b)]
    diff = [y - x for x, y in zip(a, b)]
    out = set()
    for p in itertools.product(*ranges):
        t = None
        ok = True
        for x, px, dx in zip(a, p, diff):
            if dx == 0:
                if px != x:
                    ok = False
                    break
                continue
            tt = Fraction(px - x, dx)
            if t is None:
                t = tt
            elif tt != t:
                ok = False
                break
        if ok:
            out.add(p)
    return out


def point_on_closed_segment(w, a, b) -> bool:
    return tuple(w) in box_scan(a, b)


def nx_graph(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def linear_forest(g, vertices) -> bool:
    h = nx_graph(g).subgraph(vertices)
    return all(d <= 2 for _, d in h.degree()) and nx.is_forest(h) if len(h) else True


def independent(g, vertices) -> bool:
    return nx_graph(g).subgraph(vertices).number_of_edges() == 0


def chromatic_by_enumeration(g) -> int:
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for col in itertools.product(range(k), repeat=g.n):
            if all(col[u] != col[v] for u, v in g.edges):
                return k
    raise AssertionError("unreachable")


def mixed_by_enumeration(g, a, b) -> bool:
    for col in itertools.product(range(a + b), repeat=g.n):
        ok = True
        for c in range(a + b):
            cls = [v for v in range(g.n) if col[v] == c]
            if not (linear_forest(g, cls) if c >= a else independent(g, cls)):
                ok = False
                break
        if ok:
            return True
    return False


def drawing_valid(g, points) -> bool:
    if len(set(points)) != len(points):
        return False
    for u, v in g.edges:
        inner = box_scan(points[u], points[v]) - {points[u], points[v]}
        if any(points[w] in inner for w in range(g.n) if w not in (u, v)):
            return False
    return True


def segments_meet(p1, p2, q1, q2) -> bool:
    """Closed-segment intersection by solving the 2x2 system with Fractions."""
    rx, ry = p2[0] - p1[0], p2[1] - p1[1]
    sx, sy = q2[0] - q1[0], q2[1] - q1[1]
    den = rx * sy - ry * sx
    qpx, qpy = q1[0] - p1[0], q1[1] - p1[1]
    if den != 0:
        t = Fraction(qpx * sy - qpy * sx, den)
        u = Fraction(qpx * ry - qpy * rx, den)
        return 0 <= t <= 1 and 0 <= u <= 1
    if qpx * ry - qpy * rx != 0:
        return False  # parallel, not collinear
    rr = rx * rx + ry * ry
    t0 = Fraction(qpx * rx + qpy * ry, rr)
    t1 = t0 + Fraction(sx * rx + sy * ry, rr)
    lo, hi = min(t0, t1), max(t0, t1)
    return hi >= 0 and lo <= 1


def satisfiable(num_vars, clauses, variant) -> bool:
    for bits in itertools.product((False, True), repeat=num_vars):
        good = True
        for c in clauses:
            t = sum((bits[abs(l) - 1] if l > 0 else not bits[abs(l) - 1]) for l in c)
            if (variant == "one-in-three" and t != 1) or (variant == "nae" and t in (0, 3)):
                good = False
                break
        if good:
            return True
    return False


def strictly_inside(w, a, b) -> bool:
    """Whether w = a + t (b - a) for some rational 0 < t < 1 (any dimension)."""
    t = None
    for x, y, z in zip(a, b, w):
        if x == y:
            if z != x:
                return False
            continue
        tt = Fraction(z - x, y - x)
        if t is not None and tt != t:
            return False
        t = tt
    return t is not None and 0 < t < 1


def mixed_by_masks(g, a, b) -> bool:
    """(a, b)-colorability by enumerating every assignment with numpy.

    Each color class is encoded as a vertex bitmask and looked up in
    tables of independent sets and linear forests built by union-find.
    """
    import numpy as np

    n = g.n
    edges = list(g.edges)
    indep = np.zeros(1 << n, dtype=bool)
    forest = np.zeros(1 << n, dtype=bool)
    for mask in range(1 << n):
        inside = [(u, v) for u, v in edges if mask >> u & 1 and mask >> v & 1]
        indep[mask] = not inside
        deg = [0] * n
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for u, v in inside:
            deg[u] += 1
            deg[v] += 1
            ru, rv = find(u), find(v)
            if ru == rv or deg[u] > 2 or deg[v] > 2:
                ok = False
                break
            parent[ru] = rv
        forest[mask] = ok
    k = a + b
    if k == 0:
        return n == 0
    cols = np.array(list(itertools.product(range(k), repeat=n)), dtype=np.int64).reshape(-1, n)
    weights = (1 << np.arange(n, dtype=np.int64))
    good = np.ones(len(cols), dtype=bool)
    for c in range(k):
        masks = ((cols == c) * weights).sum(axis=1)
        good &= (indep if c < a else forest)[masks]
    return bool(good.any())


def drawing_valid_exact(g, points) -> bool:
    """Validity via exact parametrics; fine for huge coordinates."""
    if len(set(map(tuple, points))) != len(points):
        return False
    return not any(strictly_inside(points[w], points[u], points[v])
                   for u, v in g.edges for w in range(g.n) if w not in (u, v))
