"""Drawing and locating graphs on a bounded number of columns.

A column holds a linear forest of the graph, so drawings on ``l`` columns
correspond to partitions into ``l`` linear forests. Primitive drawings
additionally need some classes to be independent sets; see
:func:`locate_on_columns`.
"""
from __future__ import annotations

import itertools
from typing import Sequence

from .graph import (
    NORMAL,
    PATH,
    Graph,
    PartClass,
    VertexPartition,
    find_k_coloring,
    is_linear_forest,
    partition_problems,
)
from .lattice import on_segment, segment_gcd
from .verify import GridDrawing, is_valid_drawing


def path_order(g: Graph, vertices) -> list:
    """Vertices of a linear forest listed path by path, each path end to end."""
    s = set(vertices)
    nbrs = {v: sorted(u for u in g.adj[v] if u in s) for v in s}
    order: list = []
    seen: set = set()
    for start in sorted(s):
        if start in seen or len(nbrs[start]) > 1:
            continue
        prev, cur = None, start
        while cur is not None:
            order.append(cur)
            seen.add(cur)
            nxt = [u for u in nbrs[cur] if u != prev and u not in seen]
            prev, cur = cur, (nxt[0] if nxt else None)
    if len(order) != len(s):
        raise ValueError("vertex set does not induce a linear forest")
    return order


def two_color_forest(g: Graph, vertices) -> tuple:
    """Split a forest's vertex set into two independent sets."""
    s = set(vertices)
    side: dict = {}
    for root in sorted(s):
        if root in side:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y in s and y not in side:
                    side[y] = 1 - side[x]
                    stack.append(y)
    return (frozenset(v for v in s if side[v] == 0), frozenset(v for v in s if side[v] == 1))


def _conflict(g: Graph, pts: dict, fresh: set) -> bool:
    for u, v in g.sorted_edges():
        if u not in pts or v not in pts:
            continue
        a, b = pts[u], pts[v]
        touches = u in fresh or v in fresh
        for w, pw in pts.items():
            if w == u or w == v or not (touches or w in fresh):
                continue
            if on_segment(pw, a, b, strict=True):
                return True
    return False


def stack_columns(g: Graph, columns: Sequence[dict]) -> GridDrawing:
    """Place column ``i`` at rank ``i`` and lift it until nothing is occluded.

    ``columns[i]`` maps vertices to last coordinates. Each column is shifted
    up by the least offset ``0, 1, 2, ...`` that keeps every vertex off the
    segments of its non-incident edges; only finitely many offsets fail.
    """
    pts: dict = {}
    for rank, col in enumerate(columns):
        offset = 0
        while True:
            trial = dict(pts)
            trial.update({v: (rank, y + offset) for v, y in col.items()})
            if not _conflict(g, trial, set(col)):
                break
            offset += 1
        pts = trial
    return GridDrawing(g, tuple(pts[v] for v in range(g.n)))


def _require_partition(g: Graph, p: VertexPartition):
    problems = partition_problems(g, p)
    if problems:
        raise ValueError("invalid partition: " + "; ".join(problems))


def embed_on_columns(g: Graph, p: VertexPartition) -> GridDrawing:
    """Planar-grid drawing with class ``i`` on the column of rank ``i``."""
    _require_partition(g, p)
    columns = [{v: y for y, v in enumerate(path_order(g, c.vertices))} for c in p.classes]
    return stack_columns(g, columns)


def _last_coords(kind: str, count: int) -> list:
    filters = {
        "consecutive": lambda y: True,
        "even": lambda y: y % 2 == 0,
        "odd": lambda y: y % 2 == 1,
        "zero6": lambda y: y % 6 == 0,
        "odd_not3": lambda y: y % 2 == 1 and y % 3 != 0,
    }
    keep = filters[kind]
    return list(itertools.islice((y for y in itertools.count() if keep(y)), count))


def locate_on_columns(g: Graph, p: VertexPartition, d: int) -> GridDrawing:
    """Primitive drawing in ``Z^d`` with one column per class.

    With ``l = len(p)`` classes and ``2**(d-1) < l <= 2**d`` at most
    ``2**d - l`` classes may be of kind ``path``; ranks are taken from
    ``{0..3} x {0,1}^(d-2)`` in groups of four. For ``l <= 2**(d-1)`` every
    class is a linear forest and the ranks are distinct 0/1 vectors.
    """
    if d < 2:
        raise ValueError("dimension must be at least 2")
    _require_partition(g, p)
    l = len(p)
    if not 1 <= l <= 2 ** d:
        raise ValueError(f"{l} classes do not fit on at most {2 ** d} columns in Z^{d}")
    points: list = [None] * g.n

    def put(cls: PartClass, rank: tuple, kind: str):
        verts = path_order(g, cls.vertices) if kind == "consecutive" else sorted(cls.vertices)
        for v, y in zip(verts, _last_coords(kind, len(verts))):
            points[v] = rank + (y,)

    if l <= 2 ** (d - 1):
        corners = itertools.product((0, 1), repeat=d - 1)
        for cls, rank in zip(p.classes, corners):
            put(cls, rank, "consecutive")
        return GridDrawing(g, tuple(points))

    paths = [c for c in p.classes if c.kind == PATH]
    normals = [c for c in p.classes if c.kind == NORMAL]
    if len(paths) > 2 ** d - l:
        raise ValueError(f"{len(paths)} path classes exceed the budget 2^d - l = {2 ** d - l}")
    for tail in itertools.product((0, 1), repeat=d - 2):
        if not paths and not normals:
            break

        def rank(i):
            return (i,) + tail

        if paths and normals:
            put(paths.pop(0), rank(1), "consecutive")
            if normals:
                put(normals.pop(0), rank(0), "even")
            if normals:
                put(normals.pop(0), rank(2), "odd")
        elif paths:
            put(paths.pop(0), rank(0), "consecutive")
            if paths:
                put(paths.pop(0), rank(1), "consecutive")
        else:
            for i, kind in enumerate(("zero6", "even", "odd", "odd_not3")):
                if normals:
                    put(normals.pop(0), rank(i), kind)
    if paths or normals:
        raise ValueError("classes do not fit in the available column groups")
    return GridDrawing(g, tuple(points))


def _is_primitive_drawing(dr: GridDrawing) -> bool:
    return all(segment_gcd(dr.points[u], dr.points[v]) == 1 for u, v in dr.graph.edges)


def partition_from_located(dr: GridDrawing, d: int, l: int) -> VertexPartition:
    """Partition read off a primitive drawing on ``l`` columns in ``Z^d``.

    Columns whose ranks agree mod 2 with another column are split by the
    parity of the last coordinate into independent classes; a column alone
    in its parity class becomes a path class. Path classes are then split
    into independent pairs while they exceed ``2**d - l``, and classes are
    split further until there are exactly ``l``.
    """
    g = dr.graph
    if dr.dim != d:
        raise ValueError(f"drawing has dimension {dr.dim}, expected {d}")
    if not is_valid_drawing(dr) or not _is_primitive_drawing(dr):
        raise ValueError("drawing must be valid and primitive")
    cols: dict = {}
    for v, pt in enumerate(dr.points):
        cols.setdefault(pt[:-1], []).append(v)
    if len(cols) != l:
        raise ValueError(f"drawing uses {len(cols)} columns, expected {l}")
    if not 1 <= l <= 2 ** d:
        raise ValueError(f"l = {l} is out of range for d = {d}")
    if l <= 2 ** (d - 1):
        return VertexPartition(tuple(PartClass(PATH, frozenset(cols[r])) for r in sorted(cols)))

    cliques: dict = {}
    for r in sorted(cols):
        cliques.setdefault(tuple(x % 2 for x in r), []).append(r)
    classes: list = []
    for key in sorted(cliques):
        ranks = cliques[key]
        if len(ranks) == 1:
            classes.append(PartClass(PATH, frozenset(cols[ranks[0]])))
            continue
        verts = [v for r in ranks for v in cols[r]]
        for parity in (0, 1):
            part = frozenset(v for v in verts if dr.points[v][-1] % 2 == parity)
            if part:
                classes.append(PartClass(NORMAL, part))

    budget = 2 ** d - l

    def demote(i):
        cls = classes.pop(i)
        halves = [h for h in two_color_forest(g, cls.vertices) if h]
        for h in reversed(halves):
            classes.insert(i, PartClass(NORMAL, h))

    while sum(c.kind == PATH for c in classes) > budget:
        demote(next(i for i, c in enumerate(classes) if c.kind == PATH))
    while len(classes) < l:
        i = next((i for i, c in enumerate(classes) if c.kind == NORMAL and len(c.vertices) > 1), None)
        if i is not None:
            vs = sorted(classes[i].vertices)
            classes[i:i + 1] = [PartClass(NORMAL, frozenset(vs[:1])), PartClass(NORMAL, frozenset(vs[1:]))]
            continue
        i = next(i for i, c in enumerate(classes) if len(c.vertices) > 1)
        demote(i)
    return VertexPartition(tuple(classes))


def split_path_colors(p: VertexPartition, g: Graph, d: int) -> VertexPartition:
    """Split ``l - 2**(d-1)`` path classes into two independent classes each.

    The result has ``k = 2l - 2**(d-1)`` classes, ``2**(d-1)`` of them paths;
    it satisfies the class budget of :func:`locate_on_columns` in ``Z^(d+1)``.
    With ``l <= 2**(d-1)`` nothing needs splitting and ``p`` is returned.
    """
    _require_partition(g, p)
    l = len(p)
    if l < 1 or l > 2 ** d:
        raise ValueError(f"l = {l} is out of range for d = {d}")
    if any(c.kind != PATH for c in p.classes):
        raise ValueError("all classes must be path classes")
    extra = l - 2 ** (d - 1)
    if extra <= 0:
        return p
    out = []
    for i, cls in enumerate(p.classes):
        if i < extra:
            out.extend(PartClass(NORMAL, h) for h in two_color_forest(g, cls.vertices))
        else:
            out.append(cls)
    return VertexPartition(tuple(out))


def transfer_to_plane(dr: GridDrawing) -> GridDrawing:
    """Move every column of a drawing onto consecutive columns of ``Z^2``."""
    cols: dict = {}
    for v, pt in enumerate(dr.points):
        cols.setdefault(pt[:-1], {})[v] = pt[-1]
    low = {r: min(c.values()) for r, c in cols.items()}
    columns = [{v: y - low[r] for v, y in cols[r].items()} for r in sorted(cols)]
    return stack_columns(dr.graph, columns)


def lovasz_partition(g: Graph, ks: Sequence[int], with_moves: bool = False):
    """Partition ``V`` into ``len(ks)`` parts with ``G[V_i]`` of max degree ``<= ks[i]``.

    Requires ``sum(ks) >= maxdeg - m + 1``. Starting from everything in part
    0, a vertex over its cap moves to the first part where it has at most
    ``k_j`` neighbours; each move lowers ``sum_i e(G[V_i]) - k_i |V_i|`` by at
    least one, so the loop terminates. With ``with_moves`` the move count is
    returned as well.
    """
    m = len(ks)
    if m == 0 or any(k < 0 for k in ks):
        raise ValueError("need at least one nonnegative cap")
    if sum(ks) < g.max_degree() - m + 1:
        raise ValueError(f"caps sum to {sum(ks)} < maxdeg - m + 1 = {g.max_degree() - m + 1}")
    part = [0] * g.n
    inner = [[0] * m for _ in range(g.n)]  # inner[v][j]: neighbours of v in part j
    for v in range(g.n):
        inner[v][0] = g.degree(v)
    moves = 0
    while True:
        v = next((v for v in range(g.n) if inner[v][part[v]] > ks[part[v]]), None)
        if v is None:
            break
        j = next(j for j in range(m) if inner[v][j] <= ks[j])
        old = part[v]
        part[v] = j
        for u in g.adj[v]:
            inner[u][old] -= 1
            inner[u][j] += 1
        moves += 1
    parts = [frozenset(v for v in range(g.n) if part[v] == i) for i in range(m)]
    return (parts, moves) if with_moves else parts


def lovasz_potential(g: Graph, parts: Sequence, ks: Sequence[int]) -> int:
    return sum(len(g.induced_edges(s)) - k * len(s) for s, k in zip(parts, ks))


def _two_linear_forests_subcubic(g: Graph) -> tuple:
    """Split a graph of max degree 3 into two linear forests."""
    n = g.n
    color = [-1] * n
    seen: set = set()
    rest = []
    for v in range(n):
        if v in seen:
            continue
        comp, stack = {v}, [v]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        if len(comp) == 4 and all(g.degree(x) == 3 for x in comp):
            a, b, c, e = sorted(comp)
            color[a] = color[b] = 0
            color[c] = color[e] = 2
        else:
            rest.extend(sorted(comp))
    if rest:
        sub, labels = g.induced(rest)
        three = find_k_coloring(sub, 3)
        if three is None:
            raise AssertionError("a subcubic graph without K4 components is 3-colorable")
        for i, v in enumerate(labels):
            color[v] = three[i]

    def deg_in(v, group):
        return sum(1 for u in g.adj[v] if color[u] in group)

    low, high = (0, 1), (2, 3)
    changed = True
    while changed:
        changed = False
        for v in range(n):
            if color[v] in low and deg_in(v, low) == 3:
                color[v] = 2
                changed = True
    while True:
        cyc = _cycle_vertex(g, {v for v in range(n) if color[v] in low})
        if cyc is None:
            break
        color[cyc] = 3
    for v in range(n):
        if color[v] in high and deg_in(v, high) == 3:
            color[v] = 0
    first = frozenset(v for v in range(n) if color[v] in low)
    second = frozenset(v for v in range(n) if color[v] in high)
    if is_linear_forest(g, first) and is_linear_forest(g, second):
        return first, second
    from .mixed import MixedSpec, mixed_color

    found = mixed_color(g, MixedSpec(0, 2))
    if found is None:
        raise AssertionError("a subcubic graph always splits into two linear forests")
    return (frozenset(v for v in range(n) if found[v] == 0), frozenset(v for v in range(n) if found[v] == 1))


def _cycle_vertex(g: Graph, s: set):
    """Smallest vertex on a cycle of ``G[s]``, or ``None`` if ``G[s]`` is a forest."""
    core = set(s)
    deg = {v: sum(1 for u in g.adj[v] if u in core) for v in core}
    leaves = [v for v in core if deg[v] <= 1]
    while leaves:
        v = leaves.pop()
        if v not in core:
            continue
        core.discard(v)
        for u in g.adj[v]:
            if u in core:
                deg[u] -= 1
                if deg[u] <= 1:
                    leaves.append(u)
    # what survives leaf-stripping is cycles plus paths between them
    for v in sorted(core):
        if deg[v] >= 2:
            return v
    return None


def degree_partition(g: Graph, d: int) -> VertexPartition:
    """``2**d`` path classes for a graph with maximum degree ``<= 2**(d+1) - 1``."""
    if d < 1:
        raise ValueError("d must be positive")
    if g.max_degree() > 2 ** (d + 1) - 1:
        raise ValueError(f"max degree {g.max_degree()} exceeds 2^(d+1) - 1 = {2 ** (d + 1) - 1}")
    parts = _degree_split(g, list(range(g.n)), d)
    return VertexPartition(tuple(PartClass(PATH, s) for s in parts))


def _degree_split(g: Graph, vertices: list, d: int) -> list:
    sub, labels = g.induced(vertices)
    if d == 1:
        halves = _two_linear_forests_subcubic(sub)
    else:
        cap = 2 ** d - 1
        halves = lovasz_partition(sub, [cap, cap])
    out = []
    for h in halves:
        verts = [labels[i] for i in sorted(h)]
        if d == 1:
            out.append(frozenset(verts))
        else:
            out.extend(_degree_split(g, verts, d - 1))
    return out
