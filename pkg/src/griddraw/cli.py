"""Command-line front end.

Exit status: 0 success or "yes", 1 "no" / no solution, 2 bad input,
3 search budget exhausted.
"""
from __future__ import annotations

import argparse
import random
import sys

from . import formats
from .columns import embed_on_columns, locate_on_columns
from .errors import BudgetExceeded, FormatError
from .generators import random_graph, random_planar
from .graph import DEFAULT_BUDGET, chromatic_number, is_proper_coloring
from .locator import build_column_family, locate_from_coloring
from .mixed import MixedSpec, build_formula_graph, mixed_color, mixed_color_bruteforce, reduce_add_cliques
from .planar import proper_pipeline
from .svg import render_svg
from .verify import gp, is_planar_drawing, is_proper, is_valid_drawing, min_gp_bruteforce

OK, NO, BAD_INPUT, BUDGET = 0, 1, 2, 3


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror}") from None


def _load(path: str):
    try:
        return formats.loads(_read(path))
    except FormatError as exc:
        raise FormatError(f"{path}: {exc}") from None


def _emit(args, obj) -> None:
    text = formats.dumps(obj)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_drawing(args, dr) -> None:
    _emit(args, formats.drawing_to_json(dr))
    if getattr(args, "svg", None):
        if dr.dim == 2:
            with open(args.svg, "w", encoding="utf-8") as fh:
                fh.write(render_svg(dr))
        else:
            print(f"note: no SVG for a {dr.dim}-dimensional drawing", file=sys.stderr)


def _spec(args) -> MixedSpec:
    try:
        return MixedSpec(args.a, args.b)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def cmd_verify(args) -> int:
    dr = formats.drawing_from_json(_load(args.drawing))
    report = {"valid": is_valid_drawing(dr), "gp": gp(dr)}
    if dr.dim == 2:
        report["planar"] = is_planar_drawing(dr)
        report["proper"] = is_proper(dr)
    _emit(args, report)
    ok = report["valid"] and (not args.proper or report.get("proper", False))
    return OK if ok else NO


def cmd_gp(args) -> int:
    dr = formats.drawing_from_json(_load(args.drawing))
    print(gp(dr))
    return OK


def cmd_locate(args) -> int:
    g = formats.graph_from_json(_load(args.graph))
    if args.coloring:
        c = formats.coloring_from_json(_load(args.coloring))
        if not is_proper_coloring(g, c) or len(c) != g.n:
            raise FormatError(f"{args.coloring}: not a proper coloring of the graph")
    else:
        _, c = chromatic_number(g, args.budget)
    if len(set(c)) > args.q ** args.d:
        print(f"needs {len(set(c))} colors, more than q^d = {args.q ** args.d}", file=sys.stderr)
        return NO
    _emit_drawing(args, locate_from_coloring(g, c, args.q, args.d))
    return OK


def cmd_embed_columns(args) -> int:
    g = formats.graph_from_json(_load(args.graph))
    p = formats.partition_from_json(_load(args.partition))
    try:
        dr = embed_on_columns(g, p)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    _emit_drawing(args, dr)
    return OK


def cmd_locate_columns(args) -> int:
    g = formats.graph_from_json(_load(args.graph))
    p = formats.partition_from_json(_load(args.partition))
    try:
        dr = locate_on_columns(g, p, args.d)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    _emit_drawing(args, dr)
    return OK


def cmd_mixed_color(args) -> int:
    g = formats.graph_from_json(_load(args.graph))
    spec = _spec(args)
    c = mixed_color(g, spec, args.budget)
    _emit(args, formats.mixed_result_to_json(spec, c))
    return OK if c is not None else NO


def cmd_reduce_cliques(args) -> int:
    g = formats.graph_from_json(_load(args.graph))
    spec = _spec(args)
    try:
        h = reduce_add_cliques(g, spec)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    _emit(args, formats.graph_to_json(h))
    return OK


def cmd_formula_graph(args) -> int:
    f, variant = formats.parse_dimacs(_read(args.cnf), args.variant)
    if args.variant:
        variant = args.variant
    _emit(args, formats.formula_graph_to_json(build_formula_graph(f, variant)))
    return OK


def cmd_proper(args) -> int:
    g = formats.graph_from_json(_load(args.graph))
    try:
        dr, rep = proper_pipeline(g, report=True, budget=args.budget)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    _emit_drawing(args, dr)
    if args.report:
        sys.stderr.write(formats.dumps(rep.as_dict()))
    return OK


def cmd_columns_family(args) -> int:
    try:
        fam = build_column_family(args.s, args.d, set() if args.no_fixups else None)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    _emit(args, formats.family_to_json(fam))
    return OK


def cmd_oracle(args) -> int:
    if args.mode == "corpus":
        rng = random.Random(args.seed)
        make = random_planar if args.kind == "planar" else (lambda n, r: random_graph(n, args.p, r))
        graphs = [make(rng.randint(args.min_n, args.max_n), rng) for _ in range(args.count)]
        _emit(args, {"seed": args.seed, "graphs": [formats.graph_to_json(g) for g in graphs]})
        return OK
    if not args.graph:
        raise FormatError(f"--graph is required for --mode {args.mode}")
    g = formats.graph_from_json(_load(args.graph))
    if args.mode == "mixed":
        spec = _spec(args)
        c = mixed_color_bruteforce(g, spec)
        _emit(args, formats.mixed_result_to_json(spec, c))
        return OK if c is not None else NO
    best = min_gp_bruteforce(g, args.box, args.budget)
    _emit(args, {"box": args.box, "min_gp": best})
    return OK if best is not None else NO


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="griddraw", description="Grid drawings with few lattice points per edge.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, out=True, svg=False):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        if out:
            sp.add_argument("--out", help="write JSON here instead of stdout")
        if svg:
            sp.add_argument("--svg", help="also render a 2-D drawing as SVG")
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node budget")
        return sp

    sp = add("verify", cmd_verify, "check a drawing")
    sp.add_argument("--drawing", required=True)
    sp.add_argument("--proper", action="store_true", help="also require a proper drawing")

    sp = add("gp", cmd_gp, "max lattice points on an edge", out=False)
    sp.add_argument("--drawing", required=True)

    sp = add("locate", cmd_locate, "drawing with gp <= q from a coloring", svg=True)
    sp.add_argument("--graph", required=True)
    sp.add_argument("--coloring", help="proper coloring JSON (default: an optimal one)")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)

    sp = add("embed-columns", cmd_embed_columns, "valid 2-D drawing on one column per path class", svg=True)
    sp.add_argument("--graph", required=True)
    sp.add_argument("--partition", required=True)

    sp = add("locate-columns", cmd_locate_columns, "primitive drawing on one column per class", svg=True)
    sp.add_argument("--graph", required=True)
    sp.add_argument("--partition", required=True)
    sp.add_argument("--d", type=int, required=True)

    sp = add("mixed-color", cmd_mixed_color, "exact (a,b)-coloring")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)

    sp = add("reduce-cliques", cmd_reduce_cliques, "join two cliques to every vertex")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)

    sp = add("formula-graph", cmd_formula_graph, "reduction graph of a 3-CNF")
    sp.add_argument("--cnf", required=True)
    sp.add_argument("--variant", choices=("one-in-three", "nae"), help="override the file's variant line")

    sp = add("proper", cmd_proper, "proper drawing of a planar graph", svg=True)
    sp.add_argument("--graph", required=True)
    sp.add_argument("--report", action="store_true", help="print size metrics as JSON on stderr")

    sp = add("columns-family", cmd_columns_family, "column ranks and residue systems")
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--no-fixups", action="store_true", help="skip the extra large-prime congruences")

    sp = add("oracle", cmd_oracle, "brute-force reference answers and test corpora")
    sp.add_argument("--mode", choices=("mixed", "gp", "corpus"), required=True)
    sp.add_argument("--graph")
    sp.add_argument("--a", type=int, default=1)
    sp.add_argument("--b", type=int, default=1)
    sp.add_argument("--box", type=int, default=4)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=10)
    sp.add_argument("--min-n", type=int, default=3)
    sp.add_argument("--max-n", type=int, default=12)
    sp.add_argument("--p", type=float, default=0.3)
    sp.add_argument("--kind", choices=("random", "planar"), default="random")
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return OK if exc.code == 0 else BAD_INPUT
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return BUDGET


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
