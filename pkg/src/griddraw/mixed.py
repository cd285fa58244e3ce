"""Mixed colorings: ``a`` normal colors (independent sets) and ``b`` path colors
(linear forests), with the hardness reductions for them.

Colors ``0..a-1`` are normal and ``a..a+b-1`` are path colors.
"""
from __future__ import annotations

import itertools
import sys
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import BudgetExceeded
from .graph import DEFAULT_BUDGET, Graph, is_independent, is_linear_forest

ONE_IN_THREE = "one-in-three"
NAE = "nae"
VARIANTS = (ONE_IN_THREE, NAE)


@dataclass(frozen=True)
class MixedSpec:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0 or self.a + self.b < 1:
            raise ValueError(f"need a, b >= 0 and a + b >= 1, got ({self.a}, {self.b})")

    @property
    def colors(self) -> int:
        return self.a + self.b

    def is_path(self, color: int) -> bool:
        return color >= self.a


def is_mixed_coloring(g: Graph, c: Sequence[int], spec: MixedSpec) -> bool:
    if len(c) != g.n or any(not 0 <= x < spec.colors for x in c):
        return False
    for color in range(spec.colors):
        cls = [v for v in range(g.n) if c[v] == color]
        ok = is_linear_forest(g, cls) if spec.is_path(color) else is_independent(g, cls)
        if not ok:
            return False
    return True


def _search_order(g: Graph) -> list:
    """Maximum-cardinality ordering seeded at a highest-degree vertex."""
    order: list = []
    placed = [False] * g.n
    weight = [0] * g.n
    for _ in range(g.n):
        v = max((u for u in range(g.n) if not placed[u]), key=lambda u: (weight[u], g.degree(u), -u))
        placed[v] = True
        order.append(v)
        for u in g.adj[v]:
            weight[u] += 1
    return order


def mixed_color(g: Graph, spec: MixedSpec, budget: int = DEFAULT_BUDGET):
    """An ``(a, b)``-coloring of ``g``, or ``None`` when none exists.

    Exhaustive backtracking with conflict-directed backjumping: every
    rejected color records the earlier vertices that caused the rejection
    (a same-colored neighbour, a saturated path vertex, or the path that
    would close a cycle), and a dead end jumps straight to the latest such
    vertex. ``None`` is therefore a certified answer; running out of budget
    raises :class:`BudgetExceeded` instead.
    """
    n = g.n
    if n == 0:
        return ()
    order = _search_order(g)
    level = [0] * n
    for i, v in enumerate(order):
        level[v] = i
    adj = [sorted(g.adj[v], key=lambda u: level[u]) for v in range(n)]
    color = [-1] * n
    a, k = spec.a, spec.colors
    nodes = 0

    def same(v, c):
        return [u for u in adj[v] if color[u] == c]

    def path_between(x, y, c):
        prev = {x: None}
        stack = [x]
        while stack:
            cur = stack.pop()
            if cur == y:
                out = []
                while cur is not None:
                    out.append(cur)
                    cur = prev[cur]
                return out
            for u in adj[cur]:
                if color[u] == c and u not in prev:
                    prev[u] = cur
                    stack.append(u)
        return None

    def explain(v, c):
        nb = same(v, c)
        if not nb:
            return None
        if c < a:
            return {level[nb[0]]}
        if len(nb) >= 3:
            return {level[u] for u in nb[:3]}
        for x in nb:
            xs = same(x, c)
            if len(xs) >= 2:
                return {level[x], level[xs[0]], level[xs[1]]}
        if len(nb) == 2:
            cyc = path_between(nb[0], nb[1], c)
            if cyc is not None:
                return {level[u] for u in cyc}
        return None

    first_values = ([0] if a else []) + ([a] if spec.b else [])

    def label(i):
        nonlocal nodes
        if i == n:
            return None
        v = order[i]
        conflicts: set = set()
        for c in (first_values if i == 0 else range(k)):
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"mixed coloring search exceeded {budget} nodes")
            why = explain(v, c)
            if why:
                conflicts |= why
                continue
            color[v] = c
            res = label(i + 1)
            if res is None:
                return None
            color[v] = -1
            h, cs = res
            if h < i:
                return res
            conflicts |= cs
        if not conflicts:
            return (-1, set())
        h = max(conflicts)
        return (h, conflicts - {h})

    limit = sys.getrecursionlimit()
    if n + 100 > limit:
        sys.setrecursionlimit(n + 100)
    try:
        res = label(0)
    finally:
        sys.setrecursionlimit(limit)
    return tuple(color) if res is None else None


def _class_tables(g: Graph) -> tuple:
    size = 1 << g.n
    indep = np.zeros(size, dtype=bool)
    forest = np.zeros(size, dtype=bool)
    for mask in range(size):
        vs = [v for v in range(g.n) if mask >> v & 1]
        indep[mask] = is_independent(g, vs)
        forest[mask] = indep[mask] or is_linear_forest(g, vs)
    return indep, forest


def mixed_color_bruteforce(g: Graph, spec: MixedSpec, max_vertices: int = 12):
    """Reference answer by enumerating all ``(a+b)**n`` color assignments.

    Every subset of ``V`` is classified once (independent / linear forest);
    an assignment is valid iff each color class is of the right kind.
    Returns the lexicographically first valid assignment, or ``None``.
    """
    n = g.n
    if n > max_vertices:
        raise BudgetExceeded(f"enumeration oracle limited to {max_vertices} vertices")
    if n == 0:
        return ()
    indep, forest = _class_tables(g)
    k = spec.colors
    assign = np.array(list(itertools.product(range(k), repeat=n)), dtype=np.int64)
    bit = 1 << np.arange(n, dtype=np.int64)
    ok = np.ones(len(assign), dtype=bool)
    for c in range(k):
        masks = ((assign == c) * bit).sum(axis=1)
        ok &= (forest if spec.is_path(c) else indep)[masks]
    hits = np.flatnonzero(ok)
    return tuple(int(x) for x in assign[hits[0]]) if len(hits) else None


def reduce_add_cliques(g: Graph, spec: MixedSpec) -> Graph:
    """Join two fresh cliques ``K_{a+2b-1}`` to every vertex of ``g``.

    The result is ``(a, b)``-colorable iff ``g`` is ``(a+b)``-colorable.
    """
    if spec.a + spec.b < 2 or (spec.a, spec.b) == (2, 0):
        raise ValueError("reduction needs a + b >= 2 and (a, b) != (2, 0)")
    size = spec.a + 2 * spec.b - 1
    edges = set(g.edges)
    nxt = g.n
    for v in range(g.n):
        for _ in range(2):
            clique = list(range(nxt, nxt + size))
            nxt += size
            edges.update((v, x) for x in clique)
            edges.update(itertools.combinations(clique, 2))
    return Graph(nxt, frozenset(edges))


@dataclass(frozen=True)
class Formula:
    """3-CNF formula; literals are signed 1-based variable ids as in DIMACS."""

    num_vars: int
    clauses: tuple

    def __post_init__(self):
        cl = tuple(tuple(c) for c in self.clauses)
        object.__setattr__(self, "clauses", cl)
        for c in cl:
            if len(c) != 3:
                raise ValueError(f"clause {c} does not have exactly three literals")
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range")


def literal_value(lit: int, assignment: Sequence[bool]) -> bool:
    val = assignment[abs(lit) - 1]
    return val if lit > 0 else not val


def clause_ok(clause: Sequence[int], assignment: Sequence[bool], variant: str) -> bool:
    trues = sum(literal_value(lit, assignment) for lit in clause)
    if variant == ONE_IN_THREE:
        return trues == 1
    if variant == NAE:
        return 0 < trues < 3
    raise ValueError(f"unknown variant {variant!r}")


def satisfies(f: Formula, assignment: Sequence[bool], variant: str) -> bool:
    return all(clause_ok(c, assignment, variant) for c in f.clauses)


def brute_force_sat(f: Formula, variant: str):
    """First satisfying assignment over all ``2**num_vars`` candidates, or ``None``."""
    for bits in itertools.product((False, True), repeat=f.num_vars):
        if satisfies(f, bits, variant):
            return bits
    return None


@dataclass(frozen=True)
class VariableGadget:
    graph: Graph
    v: int
    vbar: int
    variant: str

    @property
    def spec(self) -> MixedSpec:
        return variant_spec(self.variant)


def variant_spec(variant: str) -> MixedSpec:
    if variant == ONE_IN_THREE:
        return MixedSpec(1, 1)
    if variant == NAE:
        return MixedSpec(0, 2)
    raise ValueError(f"unknown variant {variant!r}")


# Vertex 0 is v_k and vertex 1 its negation. In the (1,1) gadget, giving v_k
# and its negation the path color forces 2 and 3 to the normal color and then
# 4 and 5 into a path-colored cycle. The (0,2) gadget is K2 joined to the
# 4-cycle 2-3-5-4: equal colors on 0 and 1 push the whole 4-cycle into the
# other color.
_GADGET_EDGES = {
    ONE_IN_THREE: ((0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (2, 4), (3, 5)),
    NAE: ((0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (3, 5), (4, 5)),
}


def variable_gadget(variant: str) -> VariableGadget:
    return VariableGadget(Graph(6, frozenset(_GADGET_EDGES[variant])), 0, 1, variant)


def _with_pendants(gadget: VariableGadget, count: int) -> tuple:
    g = gadget.graph
    edges = set(g.edges)
    pend = []
    nxt = g.n
    for x in (gadget.v, gadget.vbar):
        for _ in range(count):
            edges.add((x, nxt))
            pend.append((x, nxt))
            nxt += 1
    return Graph(nxt, frozenset(edges)), pend


def _all_mixed_colorings(g: Graph, spec: MixedSpec) -> list:
    indep, forest = _class_tables(g)
    out = []
    for col in itertools.product(range(spec.colors), repeat=g.n):
        ok = True
        for c in range(spec.colors):
            mask = sum(1 << v for v in range(g.n) if col[v] == c)
            if not (forest if spec.is_path(c) else indep)[mask]:
                ok = False
                break
        if ok:
            out.append(col)
    return out


def verify_variable_gadget(gadget: VariableGadget, attachments: int = 1) -> bool:
    """Exhaustively certify the contract a variable gadget must meet.

    (i) every valid coloring separates ``v`` and ``vbar``; (ii) both orders
    of two different colors on them extend to the whole gadget; (iii) a
    path-colored ``v`` or ``vbar`` already has two same-colored neighbours,
    so any attached clause vertex is forced to a different color. (iii) is
    also checked directly with ``attachments`` pendant vertices per side.
    """
    spec = gadget.spec
    g, v, vb = gadget.graph, gadget.v, gadget.vbar
    cols = _all_mixed_colorings(g, spec)
    patterns = {(c[v], c[vb]) for c in cols}
    if any(x == y for x, y in patterns):
        return False
    if not {(0, 1), (1, 0)} <= patterns:
        return False
    for c in cols:
        for x in (v, vb):
            if spec.is_path(c[x]) and sum(1 for u in g.adj[x] if c[u] == c[x]) != 2:
                return False
    if attachments:
        big, pend = _with_pendants(gadget, attachments)
        cols = _all_mixed_colorings(big, spec)
        if any(c[x] == c[p] for c in cols for x, p in pend):
            return False
        if {(c[v], c[vb]) for c in cols} != patterns:
            return False
    return True


@lru_cache(maxsize=None)
def _certified(variant: str, attachments: int) -> bool:
    return verify_variable_gadget(variable_gadget(variant), attachments)


@dataclass(frozen=True)
class FormulaGraph:
    """Reduction graph plus the bookkeeping needed to decode a coloring."""

    graph: Graph
    formula: Formula
    variant: str
    var_vertices: tuple  # variable k-1 -> (v_k, vbar_k)
    clause_vertices: tuple  # clause i -> vertices of its three literals

    @property
    def spec(self) -> MixedSpec:
        return variant_spec(self.variant)


def build_formula_graph(f: Formula, variant: str) -> FormulaGraph:
    """Graph that is ``(1,1)``- (one-in-three) or ``(0,2)``-colorable (NAE)
    exactly when ``f`` is satisfiable in that sense.

    Each variable gets a copy of the certified gadget, each clause a triangle
    of literal vertices, and a literal vertex is joined to ``v_k`` or
    ``vbar_k`` according to its sign.
    """
    gadget = variable_gadget(variant)
    occurrences = [0] * (f.num_vars + 1)
    for clause in f.clauses:
        for lit in clause:
            occurrences[abs(lit)] += 1
    # saturation makes the contract independent of multiplicity beyond two
    if not _certified(variant, min(2, max(occurrences))):
        raise AssertionError(f"shipped {variant} gadget failed certification")
    gn = gadget.graph.n
    edges = set()
    var_vertices = []
    for k in range(f.num_vars):
        base = k * gn
        edges.update((base + u, base + w) for u, w in gadget.graph.edges)
        var_vertices.append((base + gadget.v, base + gadget.vbar))
    nxt = f.num_vars * gn
    clause_vertices = []
    for clause in f.clauses:
        tri = (nxt, nxt + 1, nxt + 2)
        nxt += 3
        edges.update(itertools.combinations(tri, 2))
        for x, lit in zip(tri, clause):
            vk, vbk = var_vertices[abs(lit) - 1]
            edges.add((x, vk if lit > 0 else vbk))
        clause_vertices.append(tri)
    return FormulaGraph(Graph(nxt, frozenset(edges)), f, variant, tuple(var_vertices), tuple(clause_vertices))


def decode_assignment(c: Sequence[int], fg: FormulaGraph) -> tuple:
    """Truth assignment read from a coloring of the reduction graph.

    A literal vertex gets color 0 exactly when its literal is true, so
    ``v_k`` (always colored apart from its literal vertices) has color 1
    exactly when variable ``k`` is true.
    """
    if not is_mixed_coloring(fg.graph, c, fg.spec):
        raise ValueError("coloring is not a valid mixed coloring of the reduction graph")
    return tuple(c[vk] == 1 for vk, _ in fg.var_vertices)
