"""Deterministic graph and formula generators for tests and the CLI oracle."""
from __future__ import annotations

import itertools
import random

import networkx as nx
import numpy as np
from scipy.spatial import Delaunay

from .graph import PATH, Graph, PartClass, VertexPartition
from .mixed import Formula


def empty(n: int) -> Graph:
    return Graph(n, frozenset())


def complete(n: int) -> Graph:
    return Graph(n, frozenset(itertools.combinations(range(n), 2)))


def path(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def from_networkx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph(len(index), frozenset((index[u], index[v]) for u, v in h.edges()))


def atlas(max_n: int, connected: bool = True, min_n: int = 1) -> list:
    """Every graph on ``min_n..max_n`` vertices (max 7) up to isomorphism."""
    if max_n > 7:
        raise ValueError("the graph atlas stops at 7 vertices")
    out = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if min_n <= n <= max_n and (not connected or nx.is_connected(h)):
            out.append(from_networkx(h))
    return out


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, frozenset(e for e in itertools.combinations(range(n), 2) if rng.random() < p))


def random_bounded_degree(n: int, max_degree: int, rng: random.Random, density: float = 1.0) -> Graph:
    """Random edges in shuffled order, kept while both ends stay under the cap."""
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    deg = [0] * n
    edges = set()
    for u, v in pairs:
        if deg[u] < max_degree and deg[v] < max_degree and rng.random() < density:
            edges.add((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph(n, frozenset(edges))


def random_maximal_planar(n: int, rng: random.Random) -> Graph:
    """Stacked triangulation: repeatedly put a vertex inside a random face."""
    if n < 3:
        return complete(n)
    edges = {(0, 1), (0, 2), (1, 2)}
    faces = [(0, 1, 2), (0, 1, 2)]  # inner and outer face
    for v in range(3, n):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        edges.update({(a, v), (b, v), (c, v)})
        faces.extend([(a, b, v), (a, c, v), (b, c, v)])
    return Graph(n, frozenset(edges))


def random_planar(n: int, rng: random.Random, keep: float = 0.8) -> Graph:
    """Delaunay triangulation of random points with each edge kept with probability ``keep``."""
    if n < 4:
        base = complete(n)
        return Graph(n, frozenset(e for e in base.sorted_edges() if rng.random() < keep))
    pts = np.array([(rng.random(), rng.random()) for _ in range(n)])
    tri = Delaunay(pts)
    edges = set()
    for simplex in tri.simplices:
        for u, v in itertools.combinations(sorted(int(x) for x in simplex), 2):
            edges.add((u, v))
    return Graph(n, frozenset(e for e in sorted(edges) if rng.random() < keep))


def random_path_partitioned(n: int, classes: int, rng: random.Random, cross: float = 0.3) -> tuple:
    """Graph with a valid all-path partition into ``classes`` classes.

    Every class is nonempty and cut into random paths; edges between
    classes are arbitrary.
    """
    if not 1 <= classes <= n:
        raise ValueError("need 1 <= classes <= n")
    labels = list(range(classes)) + [rng.randrange(classes) for _ in range(n - classes)]
    rng.shuffle(labels)
    members = [[v for v in range(n) if labels[v] == i] for i in range(classes)]
    edges = set()
    for vs in members:
        vs = vs[:]
        rng.shuffle(vs)
        for a, b in zip(vs, vs[1:]):
            if rng.random() < 0.7:
                edges.add((min(a, b), max(a, b)))
    for u, v in itertools.combinations(range(n), 2):
        if labels[u] != labels[v] and rng.random() < cross:
            edges.add((u, v))
    part = VertexPartition(tuple(PartClass(PATH, frozenset(vs)) for vs in members))
    return Graph(n, frozenset(edges)), part


def random_3cnf(num_vars: int, num_clauses: int, rng: random.Random) -> Formula:
    clauses = []
    for _ in range(num_clauses):
        clauses.append(tuple(rng.choice((1, -1)) * rng.randint(1, num_vars) for _ in range(3)))
    return Formula(num_vars, tuple(clauses))
