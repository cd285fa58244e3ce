"""JSON and DIMACS formats.

Coordinates, ranks, residues and moduli are written as decimal strings so
that no consumer has to trust floating-point JSON numbers. Output is
canonical: sorted keys, fixed indentation, trailing newline.
"""
from __future__ import annotations

import json

from .errors import FormatError
from .graph import NORMAL, PATH, Graph, PartClass, VertexPartition
from .locator import ColumnFamily
from .mixed import VARIANTS, Formula, FormulaGraph, MixedSpec
from .verify import GridDrawing


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _int(value, where: str) -> int:
    if isinstance(value, bool):
        raise FormatError(f"{where}: expected an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value, 10)
        except ValueError:
            pass
    raise FormatError(f"{where}: expected an integer or decimal string, got {value!r}")


def _field(obj, key: str, where: str):
    if not isinstance(obj, dict):
        raise FormatError(f"{where}: expected an object")
    if key not in obj:
        raise FormatError(f"{where}: missing field {key!r}")
    return obj[key]


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}


def graph_from_json(obj) -> Graph:
    n = _int(_field(obj, "n", "graph"), "graph.n")
    raw = _field(obj, "edges", "graph")
    if not isinstance(raw, list):
        raise FormatError("graph.edges: expected a list")
    edges = []
    for i, e in enumerate(raw):
        if not isinstance(e, list) or len(e) != 2:
            raise FormatError(f"graph.edges[{i}]: expected a pair")
        edges.append((_int(e[0], f"graph.edges[{i}][0]"), _int(e[1], f"graph.edges[{i}][1]")))
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise FormatError(f"graph: {exc}") from None


def partition_to_json(p: VertexPartition) -> dict:
    return {"classes": [{"kind": c.kind, "vertices": sorted(c.vertices)} for c in p.classes]}


def partition_from_json(obj) -> VertexPartition:
    raw = _field(obj, "classes", "partition")
    if not isinstance(raw, list):
        raise FormatError("partition.classes: expected a list")
    classes = []
    for i, c in enumerate(raw):
        kind = _field(c, "kind", f"partition.classes[{i}]")
        if kind not in (NORMAL, PATH):
            raise FormatError(f"partition.classes[{i}].kind: expected 'path' or 'normal', got {kind!r}")
        vs = _field(c, "vertices", f"partition.classes[{i}]")
        if not isinstance(vs, list):
            raise FormatError(f"partition.classes[{i}].vertices: expected a list")
        classes.append(PartClass(kind, frozenset(_int(v, f"partition.classes[{i}].vertices") for v in vs)))
    return VertexPartition(tuple(classes))


def drawing_to_json(dr: GridDrawing) -> dict:
    return {
        "dim": dr.dim,
        "n": dr.graph.n,
        "edges": [list(e) for e in dr.graph.sorted_edges()],
        "points": {str(v): [str(x) for x in p] for v, p in enumerate(dr.points)},
    }


def drawing_from_json(obj) -> GridDrawing:
    g = graph_from_json(obj)
    dim = _int(_field(obj, "dim", "drawing"), "drawing.dim")
    raw = _field(obj, "points", "drawing")
    if not isinstance(raw, dict):
        raise FormatError("drawing.points: expected an object keyed by vertex")
    points = []
    for v in range(g.n):
        p = raw.get(str(v))
        if p is None:
            raise FormatError(f"drawing.points: no point for vertex {v}")
        if not isinstance(p, list) or len(p) != dim:
            raise FormatError(f"drawing.points[{v}]: expected {dim} coordinates")
        points.append(tuple(_int(x, f"drawing.points[{v}]") for x in p))
    if len(raw) != g.n:
        raise FormatError(f"drawing.points: {len(raw)} entries for {g.n} vertices")
    try:
        return GridDrawing(g, tuple(points))
    except ValueError as exc:
        raise FormatError(f"drawing: {exc}") from None


def coloring_to_json(c) -> dict:
    return {"colors": [list(x) if isinstance(x, tuple) else x for x in c]}


def coloring_from_json(obj) -> tuple:
    raw = _field(obj, "colors", "coloring")
    if not isinstance(raw, list):
        raise FormatError("coloring.colors: expected a list")
    out = []
    for i, x in enumerate(raw):
        if isinstance(x, list):
            out.append(tuple(_int(y, f"coloring.colors[{i}]") for y in x))
        else:
            out.append(_int(x, f"coloring.colors[{i}]"))
    return tuple(out)


def mixed_result_to_json(spec: MixedSpec, coloring) -> dict:
    return {
        "a": spec.a,
        "b": spec.b,
        "colorable": coloring is not None,
        "coloring": None if coloring is None else list(coloring),
    }


def family_to_json(fam: ColumnFamily) -> dict:
    columns = []
    for i in range(fam.s):
        system = fam.last_coord_system(i)
        columns.append({
            "rank": [str(x) for x in fam.ranks[i]],
            "residues": [[str(m), str(r)] for m, r in system.constraints],
        })
    return {
        "s": fam.s,
        "d": fam.d,
        "modulus": str(fam.modulus),
        "exponents": {str(p): e for p, e in sorted(fam.exponents.items())},
        "fixups": {str(p): {str(i): str(r) for i, r in sorted(cols.items())} for p, cols in sorted(fam.fixups.items())},
        "columns": columns,
    }


def formula_graph_to_json(fg: FormulaGraph) -> dict:
    return {
        "graph": graph_to_json(fg.graph),
        "variant": fg.variant,
        "spec": {"a": fg.spec.a, "b": fg.spec.b},
        "variables": [list(pair) for pair in fg.var_vertices],
        "clauses": [list(tri) for tri in fg.clause_vertices],
    }


def parse_dimacs(text: str, default_variant: str = None) -> tuple:
    """Parse a 3-CNF in DIMACS form; returns ``(Formula, variant)``.

    The variant comes from a ``c variant: one-in-three|nae`` comment line.
    """
    variant = None
    header = None
    lits: list = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        if line.startswith("c"):
            body = line[1:].strip()
            if body.lower().startswith("variant:"):
                variant = body.split(":", 1)[1].strip().lower()
                if variant not in VARIANTS:
                    raise FormatError(f"line {lineno}: unknown variant {variant!r}")
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise FormatError(f"line {lineno}: expected 'p cnf <vars> <clauses>'")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer counts in header") from None
            continue
        if header is None:
            raise FormatError(f"line {lineno}: clause before 'p cnf' header")
        for tok in line.split():
            try:
                lits.append((int(tok), lineno))
            except ValueError:
                raise FormatError(f"line {lineno}: bad literal {tok!r}") from None
    if header is None:
        raise FormatError("missing 'p cnf' header")
    clauses = []
    cur: list = []
    for lit, lineno in lits:
        if lit == 0:
            if len(cur) != 3:
                raise FormatError(f"line {lineno}: clause has {len(cur)} literals, expected 3")
            clauses.append(tuple(cur))
            cur = []
            continue
        if abs(lit) > header[0]:
            raise FormatError(f"line {lineno}: literal {lit} exceeds {header[0]} variables")
        cur.append(lit)
    if cur:
        raise FormatError("last clause is not terminated by 0")
    if len(clauses) != header[1]:
        raise FormatError(f"header promises {header[1]} clauses, found {len(clauses)}")
    variant = variant or default_variant
    if variant is None:
        raise FormatError("no 'c variant:' line and no variant given")
    return Formula(header[0], tuple(clauses)), variant


def formula_to_dimacs(f: Formula, variant: str) -> str:
    lines = [f"c variant: {variant}", f"p cnf {f.num_vars} {len(f.clauses)}"]
    lines += [" ".join(str(x) for x in c) + " 0" for c in f.clauses]
    return "\n".join(lines) + "\n"
