"""Checks on claimed grid drawings, plus a tiny exhaustive drawing oracle."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import BudgetExceeded
from .graph import DEFAULT_BUDGET, Graph
from .lattice import on_segment, segment_gcd, segment_lattice_points


@dataclass(frozen=True)
class GridDrawing:
    """Injective placement of the vertices of ``graph`` on lattice points.

    ``points[v]`` is the point of vertex ``v``. Coordinates are Python ints,
    so nothing overflows however large the construction gets.
    """

    graph: Graph
    points: tuple

    def __post_init__(self):
        pts = tuple(tuple(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if len(pts) != self.graph.n:
            raise ValueError(f"{len(pts)} points for {self.graph.n} vertices")
        dims = {len(p) for p in pts}
        if len(dims) > 1:
            raise ValueError(f"points of mixed dimensions {sorted(dims)}")
        if dims and min(dims) < 2:
            raise ValueError("grid dimension must be at least 2")

    @property
    def dim(self) -> int:
        return len(self.points[0]) if self.points else 2

    def is_injective(self) -> bool:
        return len(set(self.points)) == len(self.points)

    def bounding_box(self) -> tuple:
        lo = tuple(min(c) for c in zip(*self.points))
        hi = tuple(max(c) for c in zip(*self.points))
        return lo, hi


def is_valid_drawing(dr: GridDrawing) -> bool:
    """No vertex point on the segment of a non-incident edge, and injective."""
    if not dr.is_injective():
        return False
    pts = dr.points
    for u, v in dr.graph.sorted_edges():
        a, b = pts[u], pts[v]
        for w in range(dr.graph.n):
            if w != u and w != v and on_segment(pts[w], a, b, strict=True):
                return False
    return True


def gp(dr: GridDrawing) -> int:
    """Largest number of lattice points on any edge segment (0 when edgeless)."""
    return max((segment_gcd(dr.points[u], dr.points[v]) + 1 for u, v in dr.graph.edges), default=0)


def _orient(a, b, c) -> int:
    val = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (val > 0) - (val < 0)


def _within_box(a, b, c) -> bool:
    return min(a[0], b[0]) <= c[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= c[1] <= max(a[1], b[1])


def segments_intersect(p1, p2, q1, q2) -> bool:
    """Closed-segment intersection test with exact arithmetic."""
    d1 = _orient(q1, q2, p1)
    d2 = _orient(q1, q2, p2)
    d3 = _orient(p1, p2, q1)
    d4 = _orient(p1, p2, q2)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    if d1 == 0 and _within_box(q1, q2, p1):
        return True
    if d2 == 0 and _within_box(q1, q2, p2):
        return True
    if d3 == 0 and _within_box(p1, p2, q1):
        return True
    if d4 == 0 and _within_box(p1, p2, q2):
        return True
    return False


def straight_line_planar(graph: Graph, points: Sequence) -> bool:
    """Planarity of a straight-line drawing given by 2-D exact points."""
    edges = graph.sorted_edges()
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1:]:
            shared = {a, b} & {c, d}
            if not shared:
                if segments_intersect(points[a], points[b], points[c], points[d]):
                    return False
                continue
            (u,) = shared
            v = b if a == u else a
            w = d if c == u else c
            # edges meeting at u may only touch at u
            if on_segment(points[w], points[u], points[v]) or on_segment(points[v], points[u], points[w]):
                return False
    return True


def is_planar_drawing(dr: GridDrawing) -> bool:
    if dr.dim != 2:
        raise ValueError(f"planarity is only defined for dimension 2, got {dr.dim}")
    if not dr.is_injective():
        return False
    return straight_line_planar(dr.graph, dr.points)


def is_proper(dr: GridDrawing) -> bool:
    """Valid, planar and primitive (every edge meets exactly two lattice points)."""
    if dr.dim != 2:
        raise ValueError(f"proper drawings are two-dimensional, got {dr.dim}")
    if not is_valid_drawing(dr) or not is_planar_drawing(dr):
        return False
    return all(segment_gcd(dr.points[u], dr.points[v]) == 1 for u, v in dr.graph.edges)


def column_ranks(dr: GridDrawing) -> dict:
    """Vertices grouped by column rank (all coordinates but the last)."""
    groups: dict = {}
    for v, p in enumerate(dr.points):
        groups.setdefault(p[:-1], set()).add(v)
    return {rank: groups[rank] for rank in sorted(groups)}


def min_gp_bruteforce(g: Graph, box: int, budget: int = DEFAULT_BUDGET):
    """Minimum gp over every valid drawing of ``g`` inside ``[0, box]^2``.

    Exhaustive branch and bound; returns ``None`` when no valid drawing fits.
    The first vertex is restricted to one eighth of the box, which is
    harmless because the box is invariant under its eight symmetries.
    """
    grid = [(x, y) for x in range(box + 1) for y in range(box + 1)]
    if g.n > len(grid):
        return None
    if g.n == 0:
        return 0
    index = {p: i for i, p in enumerate(grid)}
    npts = len(grid)
    cost = [[0] * npts for _ in range(npts)]
    inside = [[frozenset()] * npts for _ in range(npts)]
    for i, j in itertools.combinations(range(npts), 2):
        seg = segment_lattice_points(grid[i], grid[j])
        cost[i][j] = cost[j][i] = len(seg)
        inner = frozenset(index[p] for p in seg[1:-1])
        inside[i][j] = inside[j][i] = inner

    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    adj = g.adj
    first_choices = [i for i, (x, y) in enumerate(grid) if y <= x and 2 * x <= box]
    place = [-1] * g.n
    used: set = set()
    best = [None]
    nodes = 0

    def rec(k, cur):
        nonlocal nodes
        if best[0] is not None and cur >= best[0]:
            return
        if k == g.n:
            best[0] = cur
            return
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"drawing search exceeded {budget} nodes")
        v = order[k]
        placed = order[:k]
        for i in (first_choices if k == 0 else range(npts)):
            if i in used:
                continue
            ok = True
            for a in placed:
                for b in adj[a]:
                    if place[b] >= 0 and a < b and i in inside[place[a]][place[b]]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            worst = cur
            for u in adj[v]:
                j = place[u]
                if j < 0:
                    continue
                if inside[i][j] & used:
                    ok = False
                    break
                worst = max(worst, cost[i][j])
            if not ok or (best[0] is not None and worst >= best[0]):
                continue
            place[v] = i
            used.add(i)
            rec(k + 1, worst)
            used.discard(i)
            place[v] = -1
            if best[0] == 2 or (best[0] is not None and not g.edges):
                return

    rec(0, 0 if not g.edges else 2)
    return best[0]
