"""Drawings with few lattice points per edge, built from proper colorings.

A coloring with at most ``q**d`` colors is turned into a drawing in ``Z^d``
whose segments carry at most ``q`` lattice points. Each color class gets its
own column; columns are chosen by CRT from periodic residue patterns so that
coordinate differences between distinct columns have small gcds.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, is_proper_coloring
from .lattice import ResidueSystem, crt_solve, is_prime, on_segment, prime_factors, primes_below
from .verify import GridDrawing


def _lex_tuple(k: int, p: int, d: int) -> tuple:
    out = []
    for _ in range(d):
        k, digit = divmod(k, p)
        out.append(digit)
    return tuple(reversed(out))


def pattern_term(p: int, e: int, d: int, i: int) -> tuple:
    """Term ``i`` of the periodic residue pattern of level ``e`` for prime ``p``.

    Level 1 lists ``(Z_p)^d`` lexicographically. Level ``e`` repeats level
    ``e-1`` ``p**d`` times, shifting block ``k`` by ``p**(e-1)`` times the
    ``k``-th lexicographic tuple. Terms repeat with period ``p**(d*e)``.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if e < 1 or d < 1 or i < 0:
        raise ValueError("need e >= 1, d >= 1, i >= 0")
    i %= p ** (d * e)
    block = p ** d
    coords = [0] * d
    scale = 1
    for _ in range(e):
        i, digit = divmod(i, block)
        for j, t in enumerate(_lex_tuple(digit, p, d)):
            coords[j] += scale * t
        scale *= p
    return tuple(coords)


def pattern_exponent(p: int, s: int, d: int) -> int:
    """Smallest ``e`` with ``p**(d*e) >= s``."""
    e = 1
    while p ** (d * e) < s:
        e += 1
    return e


@dataclass(frozen=True)
class ColumnFamily:
    s: int
    d: int
    exponents: dict  # prime p < s -> f(p)
    ranks: tuple  # column i -> tuple of d-1 ints
    residues: tuple  # column i -> tuple of (p**f(p), residue) for p < s
    fixups: dict  # prime p >= s -> {column: residue mod p}

    @property
    def modulus(self) -> int:
        return math.prod(p ** e for p, e in self.exponents.items())

    def last_coord_system(self, i: int) -> ResidueSystem:
        cons = list(self.residues[i])
        for p in sorted(self.fixups):
            if i in self.fixups[p]:
                cons.append((p, self.fixups[p][i]))
        return ResidueSystem(tuple(cons))

    def column_points(self, i: int):
        """Points of column ``i`` with nonnegative last coordinate, ascending."""
        x, m = crt_solve(self.last_coord_system(i))
        rank = self.ranks[i]
        while True:
            yield rank + (x,)
            x += m


def _rank_gcd(r1: tuple, r2: tuple) -> int:
    return math.gcd(*(a - b for a, b in zip(r1, r2)))


def _affected_columns(ranks: Sequence[tuple], p: int) -> list:
    classes: dict = {}
    for i, r in enumerate(ranks):
        classes.setdefault(tuple(x % p for x in r), []).append(i)
    return sorted(i for cols in classes.values() if len(cols) > 1 for i in cols)


def auto_fixup_primes(ranks: Sequence[tuple], s: int) -> list:
    """Primes ``>= s`` dividing every coordinate of some pairwise rank difference."""
    found = set()
    for i in range(len(ranks)):
        for j in range(i + 1, len(ranks)):
            found.update(p for p in prime_factors(_rank_gcd(ranks[i], ranks[j])) if p >= s)
    return sorted(found)


def build_column_family(s: int, d: int, fixup_primes=None) -> ColumnFamily:
    """The ``s`` columns of the construction in ``Z^d``.

    ``fixup_primes=None`` computes the primes ``>= s`` that divide some rank
    difference; pass an explicit collection to override (``set()`` for none).
    """
    if s < 2:
        raise ValueError("s must be at least 2")
    if d < 2:
        raise ValueError("dimension must be at least 2")
    primes = primes_below(s)
    exps = {p: pattern_exponent(p, s, d) for p in primes}
    modulus = math.prod(p ** e for p, e in exps.items())

    ranks: list = []
    residues: list = []
    for i in range(s):
        terms = {p: pattern_term(p, exps[p], d, i) for p in primes}
        rank = []
        for j in range(d - 1):
            x, _ = crt_solve(ResidueSystem(tuple((p ** exps[p], terms[p][j]) for p in primes)))
            rank.append(x)
        while tuple(rank) in ranks:
            rank[0] += modulus
        ranks.append(tuple(rank))
        residues.append(tuple((p ** exps[p], terms[p][d - 1]) for p in primes))

    if fixup_primes is None:
        fixup_primes = auto_fixup_primes(ranks, s)
    fixups = {}
    for p in sorted(fixup_primes):
        if p < s or not is_prime(p):
            raise ValueError(f"fixup modulus {p} must be a prime >= s = {s}")
        fixups[p] = {i: i % p for i in _affected_columns(ranks, p)}
    return ColumnFamily(s, d, exps, tuple(ranks), tuple(residues), fixups)


def _blocked(c: tuple, col: int, chosen: list) -> bool:
    """Would adding ``c`` put some point strictly inside a cross-column segment?"""
    for a in range(len(chosen)):
        pa, ca = chosen[a]
        for b in range(a + 1, len(chosen)):
            pb, cb = chosen[b]
            if ca != cb and on_segment(c, pa, pb, strict=True):
                return True
    for pe, ce in chosen:
        if ce == col:
            continue
        for pw, _ in chosen:
            if pw != pe and on_segment(pw, c, pe, strict=True):
                return True
    return False


def select_visible_points(fam: ColumnFamily, n) -> dict:
    """Greedy choice of points per column, pairwise visible across columns.

    ``n`` is a per-column count, or a sequence of counts indexed by column.
    Columns are filled in index order; candidates are scanned upward and a
    candidate is kept unless it would create a lattice incidence between a
    chosen point and a segment joining two chosen points of distinct columns.
    """
    counts = [n] * fam.s if isinstance(n, int) else list(n)
    if len(counts) != fam.s or min(counts, default=0) < 0:
        raise ValueError("need one nonnegative count per column")
    chosen: list = []
    out = {}
    for col in range(fam.s):
        picked = []
        if counts[col]:
            for c in fam.column_points(col):
                if not _blocked(c, col, chosen):
                    chosen.append((c, col))
                    picked.append(c)
                    if len(picked) == counts[col]:
                        break
        out[col] = picked
    return out


def locate_from_coloring(g: Graph, c: Sequence[int], q: int, d: int) -> GridDrawing:
    """Drawing of ``g`` in ``Z^d`` with gp at most ``q``, one column per color."""
    if q < 2 or d < 2:
        raise ValueError("need q >= 2 and d >= 2")
    if not is_proper_coloring(g, c):
        raise ValueError("coloring is not proper")
    palette = sorted(set(c))
    s = q ** d
    if len(palette) > s:
        raise ValueError(f"{len(palette)} colors exceed q^d = {s}")
    column = {color: j for j, color in enumerate(palette)}
    members = [[] for _ in range(s)]
    for v in range(g.n):
        members[column[c[v]]].append(v)
    fam = build_column_family(s, d)
    picked = select_visible_points(fam, [len(m) for m in members])
    points = [None] * g.n
    for j, vs in enumerate(members):
        for v, pt in zip(vs, picked[j]):
            points[v] = pt
    return GridDrawing(g, tuple(points))


def modular_coloring(dr: GridDrawing, q: int) -> tuple:
    """Color each vertex by its coordinates mod ``q``, read as a base-``q`` number."""
    if q < 2:
        raise ValueError("q must be at least 2")
    out = []
    for p in dr.points:
        code = 0
        for x in p:
            code = code * q + x % q
        out.append(code)
    return tuple(out)
