"""Simple undirected graphs, vertex partitions and colorings.

Vertices are the dense integers ``0..n-1``. A coloring is a tuple whose
``i``-th entry is the color id of vertex ``i``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import BudgetExceeded

NORMAL = "normal"
PATH = "path"

DEFAULT_BUDGET = 5_000_000

Coloring = tuple


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside [0, {self.n})")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        pairs = [tuple(e) for e in edges]
        seen = set()
        for u, v in pairs:
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add(key)
        return cls(n, frozenset(pairs))

    @cached_property
    def adj(self) -> tuple:
        nbrs = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def induced_edges(self, vertices: Iterable[int]) -> list:
        s = set(vertices)
        return [(u, v) for u, v in self.sorted_edges() if u in s and v in s]

    def induced(self, vertices: Sequence[int]) -> tuple["Graph", list]:
        """Induced subgraph relabelled to ``0..k-1``; also returns the old labels."""
        order = sorted(set(vertices))
        index = {v: i for i, v in enumerate(order)}
        edges = [(index[u], index[v]) for u, v in self.induced_edges(order)]
        return Graph(len(order), frozenset(edges)), order


@dataclass(frozen=True)
class PartClass:
    kind: str
    vertices: frozenset

    def __post_init__(self):
        if self.kind not in (NORMAL, PATH):
            raise ValueError(f"unknown class kind {self.kind!r}")
        object.__setattr__(self, "vertices", frozenset(self.vertices))


@dataclass(frozen=True)
class VertexPartition:
    classes: tuple

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(self.classes))

    @classmethod
    def of(cls, *classes: tuple) -> "VertexPartition":
        """Build from ``(kind, vertices)`` pairs."""
        return cls(tuple(PartClass(k, frozenset(vs)) for k, vs in classes))

    def __len__(self):
        return len(self.classes)

    def count(self, kind: str) -> int:
        return sum(1 for c in self.classes if c.kind == kind)

    def class_of(self) -> dict:
        return {v: i for i, c in enumerate(self.classes) for v in c.vertices}


def _check_vertices(g: Graph, s: Iterable[int]) -> set:
    out = set(s)
    for v in out:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range [0, {g.n})")
    return out


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    s = _check_vertices(g, s)
    return not any(u in s for v in s for u in g.adj[v])


def is_linear_forest(g: Graph, s: Iterable[int]) -> bool:
    """True iff ``G[s]`` is a disjoint union of paths."""
    s = _check_vertices(g, s)
    for v in s:
        if sum(1 for u in g.adj[v] if u in s) > 2:
            return False
    parent = {v: v for v in s}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.induced_edges(s):
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def partition_problems(g: Graph, p: VertexPartition) -> list:
    """Reasons why ``p`` is not a valid partition of ``g``; empty when valid."""
    problems = []
    seen: dict = {}
    for i, cls in enumerate(p.classes):
        for v in cls.vertices:
            if not 0 <= v < g.n:
                problems.append(f"class {i}: vertex {v} out of range")
            elif v in seen:
                problems.append(f"vertex {v} appears in classes {seen[v]} and {i}")
            else:
                seen[v] = i
    missing = sorted(set(range(g.n)) - set(seen))
    if missing:
        problems.append(f"vertices not covered: {missing}")
    if problems:
        return problems
    for i, cls in enumerate(p.classes):
        if cls.kind == NORMAL and not is_independent(g, cls.vertices):
            u, v = g.induced_edges(cls.vertices)[0]
            problems.append(f"normal class {i} contains edge ({u}, {v})")
        elif cls.kind == PATH and not is_linear_forest(g, cls.vertices):
            problems.append(f"path class {i} does not induce a linear forest")
    return problems


def validate_partition(g: Graph, p: VertexPartition) -> bool:
    return not partition_problems(g, p)


def is_proper_coloring(g: Graph, c: Sequence[int]) -> bool:
    if len(c) != g.n:
        return False
    return all(c[u] != c[v] for u, v in g.edges)


def color_count(c: Sequence[int]) -> int:
    return len(set(c))


def greedy_clique(g: Graph) -> list:
    best: list = []
    for seed in range(g.n):
        clique = [seed]
        cand = set(g.adj[seed])
        while cand:
            v = max(sorted(cand), key=lambda x: len(g.adj[x] & cand))
            clique.append(v)
            cand &= g.adj[v]
        if len(clique) > len(best):
            best = clique
    return sorted(best)


def dsatur_greedy(g: Graph) -> tuple:
    """Greedy DSATUR coloring (an upper bound for the chromatic number)."""
    colors = [-1] * g.n
    for _ in range(g.n):
        v = max(
            (u for u in range(g.n) if colors[u] < 0),
            key=lambda u: (len({colors[w] for w in g.adj[u] if colors[w] >= 0}), len(g.adj[u]), -u),
        )
        taken = {colors[w] for w in g.adj[v]}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    return tuple(colors)


def find_k_coloring(g: Graph, k: int, budget: int = DEFAULT_BUDGET):
    """Exact backtracking search for a proper ``k``-coloring, or ``None``.

    Vertices are chosen by saturation degree; a fresh color is only ever the
    smallest unused one, which removes color-permutation symmetry.
    """
    n = g.n
    if n == 0:
        return ()
    if k <= 0:
        return None
    adj = [sorted(a) for a in g.adj]
    colors = [-1] * n
    counts = [[0] * k for _ in range(n)]
    sat = [0] * n
    nodes = 0

    def put(v, c, delta):
        for u in adj[v]:
            before = counts[u][c]
            counts[u][c] += delta
            if before == 0 and delta > 0:
                sat[u] += 1
            elif counts[u][c] == 0 and delta < 0:
                sat[u] -= 1

    def pick():
        best, key = -1, None
        for v in range(n):
            if colors[v] < 0:
                kv = (sat[v], len(adj[v]), -v)
                if key is None or kv > key:
                    best, key = v, kv
        return best

    def rec(depth, used):
        nonlocal nodes
        if depth == n:
            return True
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"k-coloring search exceeded {budget} nodes")
        v = pick()
        row = counts[v]
        for c in range(min(used + 1, k)):
            if row[c]:
                continue
            colors[v] = c
            put(v, c, 1)
            if rec(depth + 1, max(used, c + 1)):
                return True
            put(v, c, -1)
            colors[v] = -1
        return False

    return tuple(colors) if rec(0, 0) else None


def chromatic_number(g: Graph, budget: int = DEFAULT_BUDGET) -> tuple:
    """Exact chromatic number together with a witness coloring.

    Returns ``(k, coloring)``. The clique bound and the DSATUR bound bracket
    the search; each ``k`` in between is settled by exhaustive backtracking.
    """
    if g.n == 0:
        return 0, ()
    upper = dsatur_greedy(g)
    ub = max(upper) + 1
    lb = len(greedy_clique(g))
    for k in range(lb, ub):
        found = find_k_coloring(g, k, budget)
        if found is not None:
            return k, found
    return ub, upper
