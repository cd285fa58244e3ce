"""Proper (primitive and planar) grid drawings of planar graphs.

Pipeline: a straight-line planar embedding, an optimal coloring with at most
four colors written as pairs of bits, then two rounding phases. The x-phase
scales the embedding and snaps every x to its color's class mod 6; the
y-phase stretches y and snaps it to a class mod ``6 * prod(P)`` where ``P``
holds the primes >= 5 dividing some edge's x-difference. Each vertex moves
less than half the relevant clearance, so planarity survives, and the
congruences rule out every prime from every edge's gcd.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import networkx as nx
import numpy as np

from .graph import DEFAULT_BUDGET, Graph, chromatic_number, is_proper_coloring
from .lattice import ResidueSystem, crt_solve, prime_factors
from .verify import GridDrawing, is_proper, straight_line_planar

COLOR_PAIRS = ((0, 0), (0, 1), (1, 0), (1, 1))


@dataclass(frozen=True)
class RealEmbedding:
    """Straight-line planar drawing with exact rational coordinates."""

    graph: Graph
    points: tuple

    def __post_init__(self):
        pts = tuple((Fraction(x), Fraction(y)) for x, y in self.points)
        object.__setattr__(self, "points", pts)
        if len(pts) != self.graph.n:
            raise ValueError(f"{len(pts)} points for {self.graph.n} vertices")
        if len(set(pts)) != len(pts):
            raise ValueError("embedding is not injective")
        if not straight_line_planar(self.graph, pts):
            raise ValueError("embedding is not a planar straight-line drawing")


def _to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.sorted_edges())
    return h


def is_planar_graph(g: Graph) -> bool:
    return nx.check_planarity(_to_nx(g))[0]


def fary_embed(g: Graph) -> RealEmbedding:
    """Integer straight-line planar embedding via the shift method."""
    planar, emb = nx.check_planarity(_to_nx(g))
    if not planar:
        raise ValueError("graph is not planar")
    if g.n < 3:
        pos = {v: (v, 0) for v in range(g.n)}
    else:
        pos = nx.combinatorial_embedding_to_pos(emb)
    return RealEmbedding(g, tuple(pos[v] for v in range(g.n)))


def four_color(g: Graph, budget: int = DEFAULT_BUDGET) -> tuple:
    """Optimal coloring of a planar graph, color ``k`` written as ``(k >> 1, k & 1)``."""
    if not is_planar_graph(g):
        raise ValueError("graph is not planar")
    k, col = chromatic_number(g, budget)
    if k > 4:  # pragma: no cover - would contradict the four color theorem
        raise AssertionError(f"planar graph needed {k} colors")
    return tuple(COLOR_PAIRS[c] for c in col)


def _point_segment_sq(w, a, b):
    dx, dy = b[0] - a[0], b[1] - a[1]
    wx, wy = w[0] - a[0], w[1] - a[1]
    length = dx * dx + dy * dy
    t = wx * dx + wy * dy
    if t <= 0:
        return wx * wx + wy * wy
    if t >= length:
        ex, ey = w[0] - b[0], w[1] - b[1]
        return ex * ex + ey * ey
    cross = wx * dy - wy * dx
    return Fraction(cross * cross, 1) / length


def feature_clearance_sq(e: RealEmbedding) -> Fraction:
    """Exact squared clearance of an embedding.

    Minimum over vertex-disjoint edge pairs, vertex versus non-incident
    edge, and vertex pairs. Disjoint segments that do not cross are closest
    at an endpoint, so the first kind reduces to the second.
    """
    g, pts = e.graph, e.points
    best = None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            d = (pts[u][0] - pts[v][0]) ** 2 + (pts[u][1] - pts[v][1]) ** 2
            best = d if best is None or d < best else best
    for a, b in g.sorted_edges():
        for w in range(g.n):
            if w != a and w != b:
                d = _point_segment_sq(pts[w], pts[a], pts[b])
                best = d if d < best else best
    if best is None:
        raise ValueError("clearance needs at least two vertices")
    if best == 0:
        raise ValueError("embedding has touching features")
    return Fraction(best)


def _sqrt_lower(q: Fraction, bits: int = 32) -> Fraction:
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    scale = 1 << bits
    return Fraction(math.isqrt(num * den * scale * scale), den * scale)


def min_feature_distance(e: RealEmbedding) -> Fraction:
    """Half the clearance: exact when rational, otherwise a close lower bound."""
    low = _sqrt_lower(feature_clearance_sq(e) / 4)
    if low <= 0:
        raise ValueError("clearance too small to bound")
    return low


def grid_min_distance_bound(n: int) -> Fraction:
    """Squared lower bound ``1 / (2n^2 - 2n + 1)`` on point-to-segment distances in an n x n grid."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return Fraction(1, 2 * n * n - 2 * n + 1)


def grid_point_segment_min_sq(side: int) -> Fraction:
    """Exhaustive minimum nonzero squared distance from a grid point to a grid
    segment, over all points and segments with coordinates in ``0..side-1``.
    """
    if side < 2:
        raise ValueError("side must be at least 2")
    pts = np.array([(x, y) for x in range(side) for y in range(side)], dtype=np.int64)
    i, j = np.triu_indices(len(pts), k=1)
    a, b = pts[i], pts[j]
    d = b - a
    length = (d * d).sum(axis=1)
    best = None
    for w in pts:
        off = w - a
        t = (off * d).sum(axis=1)
        cross = off[:, 0] * d[:, 1] - off[:, 1] * d[:, 0]
        wb = w - b
        num = np.where(t <= 0, (off * off).sum(axis=1),
                       np.where(t >= length, (wb * wb).sum(axis=1), cross * cross))
        den = np.where((t > 0) & (t < length), length, 1)
        keep = num > 0
        if not keep.any():
            continue
        num, den = num[keep], den[keep]
        k = int(np.argmin(num / den))
        cand = Fraction(int(num[k]), int(den[k]))
        # float argmin is only a hint; confirm exactly against all ties
        close = np.flatnonzero(num * cand.denominator <= den * cand.numerator)
        for idx in close:
            cand = min(cand, Fraction(int(num[idx]), int(den[idx])))
        best = cand if best is None or cand < best else best
    return best


def _nearest_in_class(target: Fraction, residue: int, modulus: int, banned=()) -> int:
    """Integer congruent to ``residue`` nearest to ``target`` (ties go down), skipping ``banned``."""
    lo = math.floor(target)
    lo -= (lo - residue) % modulus
    cands = [lo - modulus, lo, lo + modulus]
    while True:
        for x in sorted(cands, key=lambda x: (abs(x - target), x)):
            if x not in banned:
                return x
        cands = [cands[0] - modulus] + cands + [cands[-1] + modulus]


def _as_pair(color) -> tuple:
    if isinstance(color, int):
        if not 0 <= color < 4:
            raise ValueError(f"color {color} outside 0..3")
        return COLOR_PAIRS[color]
    pair = tuple(color)
    if pair not in COLOR_PAIRS:
        raise ValueError(f"color {color!r} is not a pair of bits")
    return pair


def _vertical_clearance(g: Graph, xs: Sequence[int], ys: Sequence[Fraction]):
    """Smallest vertical gap between a vertex and a non-incident edge spanning
    its x, or between two vertices sharing an x. Edges must be non-vertical.
    """
    best = None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if xs[u] == xs[v]:
                gap = abs(ys[u] - ys[v])
                best = gap if best is None or gap < best else best
    for a, b in g.sorted_edges():
        lo, hi = sorted((xs[a], xs[b]))
        for w in range(g.n):
            if w in (a, b) or not lo <= xs[w] <= hi:
                continue
            y_line = ys[a] + (ys[b] - ys[a]) * Fraction(xs[w] - xs[a], xs[b] - xs[a])
            gap = abs(ys[w] - y_line)
            best = gap if best is None or gap < best else best
    if best == 0:
        raise AssertionError("x-phase produced touching features")
    return best  # None when vertical moves cannot create any incidence


@dataclass(frozen=True)
class ProperReport:
    width: int
    height: int
    primes: tuple
    modulus: int
    x_scale: int
    y_scale: int

    def as_dict(self) -> dict:
        return {
            "width": str(self.width),
            "height": str(self.height),
            "num_primes": len(self.primes),
            "primes": [str(p) for p in self.primes],
            "modulus": str(self.modulus),
            "x_scale": str(self.x_scale),
            "y_scale": str(self.y_scale),
        }


def properize(e: RealEmbedding, c: Sequence, report: bool = False):
    """Proper drawing realizing ``e`` up to small moves, with coordinates
    congruent to the colors: ``x = c1`` and ``y = c2`` modulo 6.

    With ``report=True`` returns ``(drawing, ProperReport)``.
    """
    g = e.graph
    pairs = [_as_pair(col) for col in c]
    if len(pairs) != g.n:
        raise ValueError(f"{len(pairs)} colors for {g.n} vertices")
    if not is_proper_coloring(g, pairs):
        raise ValueError("coloring is not proper")
    if g.n == 0:
        dr = GridDrawing(g, ())
        return (dr, ProperReport(0, 0, (), 6, 1, 1)) if report else dr
    if g.n == 1:
        dr = GridDrawing(g, ((pairs[0][0], pairs[0][1]),))
        return (dr, ProperReport(0, 0, (), 6, 1, 1)) if report else dr

    # x-phase: uniform scaling, then every vertex moves horizontally by at
    # most 3 + 6 * deg, which stays below half the scaled clearance
    r = min_feature_distance(e)
    reach = 3 + 6 * g.max_degree()
    sx = math.floor(reach / r) + 1
    xs: list = [None] * g.n
    for v in range(g.n):
        banned = {xs[u] for u in g.adj[v] if xs[u] is not None}
        xs[v] = _nearest_in_class(sx * e.points[v][0], pairs[v][0], 6, banned)
    ys0 = [sx * p[1] for p in e.points]

    # y-phase: stretch y so that vertical moves of at most M/2 keep every
    # vertical gap positive
    primes = sorted({p for a, b in g.edges for p in prime_factors(xs[a] - xs[b]) if p >= 5})
    modulus = 6 * math.prod(primes)
    gap = _vertical_clearance(g, xs, ys0)
    sy = 1 if gap is None else math.floor(modulus / gap) + 1
    ys = []
    for v in range(g.n):
        k = 2 * pairs[v][0] + pairs[v][1]
        res, _ = crt_solve(ResidueSystem(((6, pairs[v][1]),) + tuple((p, k) for p in primes)))
        ys.append(_nearest_in_class(sy * ys0[v], res, modulus))

    min_x, min_y = min(xs), min(ys)
    # translate by multiples of 6 * prod(P) to keep every congruence
    min_x -= min_x % 6
    min_y -= min_y % modulus
    dr = GridDrawing(g, tuple((x - min_x, y - min_y) for x, y in zip(xs, ys)))
    if not is_proper(dr):
        raise AssertionError("properize produced a drawing that is not proper")
    if report:
        (lx, ly), (hx, hy) = dr.bounding_box()
        return dr, ProperReport(hx - lx, hy - ly, tuple(primes), modulus, sx, sy)
    return dr


def parity_coloring(dr: GridDrawing) -> tuple:
    """Coordinates mod 2 of a two-dimensional drawing."""
    if dr.dim != 2:
        raise ValueError("parity coloring needs a two-dimensional drawing")
    return tuple((x % 2, y % 2) for x, y in dr.points)


def proper_pipeline(g: Graph, report: bool = False, budget: int = DEFAULT_BUDGET):
    """Embedding, optimal coloring and rounding in one call."""
    return properize(fary_embed(g), four_color(g, budget), report=report)
