"""Exact integer lattice arithmetic: segment points, primitivity, CRT."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateSegment, InconsistentSystem

Point = tuple


def _delta(a: Sequence[int], b: Sequence[int]) -> list:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return [y - x for x, y in zip(a, b)]


def segment_gcd(a: Sequence[int], b: Sequence[int]) -> int:
    """gcd of the absolute coordinate differences of ``a`` and ``b``."""
    diff = _delta(a, b)
    g = math.gcd(*diff)
    if g == 0:
        raise DegenerateSegment(f"segment endpoints coincide at {tuple(a)}")
    return g


def segment_lattice_points(a: Sequence[int], b: Sequence[int]) -> list:
    """All lattice points of the closed segment ``ab``, ordered from ``a`` to ``b``."""
    g = segment_gcd(a, b)
    step = [d // g for d in _delta(a, b)]
    return [tuple(x + j * s for x, s in zip(a, step)) for j in range(g + 1)]


def is_primitive(a: Sequence[int], b: Sequence[int]) -> bool:
    return segment_gcd(a, b) == 1


def on_segment(w: Sequence, a: Sequence, b: Sequence, strict: bool = False) -> bool:
    """Whether ``w`` lies on the closed segment ``ab`` (open if ``strict``).

    Works for any exact number type (ints, Fractions) in any dimension.
    """
    diff = _delta(a, b)
    off = _delta(a, w)
    i = next((k for k, d in enumerate(diff) if d != 0), None)
    if i is None:
        raise DegenerateSegment(f"segment endpoints coincide at {tuple(a)}")
    di, oi = diff[i], off[i]
    for dj, oj in zip(diff, off):
        if oj * di != dj * oi:
            return False
    # w = a + t (b - a) with t = oi / di
    if di < 0:
        di, oi = -di, -oi
    if strict:
        return 0 < oi < di
    return 0 <= oi <= di


@dataclass(frozen=True)
class ResidueSystem:
    """Congruences ``x = r (mod m)``, stored as ``(m, r)`` pairs."""

    constraints: tuple

    def __post_init__(self):
        norm = []
        for m, r in self.constraints:
            if m < 1:
                raise ValueError(f"modulus must be positive, got {m}")
            norm.append((m, r % m))
        object.__setattr__(self, "constraints", tuple(norm))

    def solve(self) -> tuple:
        return crt_solve(self)

    def contains(self, x: int) -> bool:
        return all(x % m == r for m, r in self.constraints)


def crt_solve(rs: ResidueSystem) -> tuple:
    """Smallest nonnegative solution and the combined modulus, ``(x, M)``.

    Moduli need not be coprime: constraints sharing a factor are merged when
    compatible. On conflict, two pairwise-incompatible constraints are named
    (pairwise compatibility is equivalent to solvability).
    """
    x, mod = 0, 1
    seen = []
    for m, r in rs.constraints:
        g = math.gcd(mod, m)
        if (r - x) % g:
            for prev in seen:
                if (r - prev[1]) % math.gcd(prev[0], m):
                    raise InconsistentSystem(prev, (m, r))
            raise InconsistentSystem(seen[-1], (m, r))  # pragma: no cover
        # x + mod * t = r (mod m)
        step = mod // g
        t = ((r - x) // g) * pow(step, -1, m // g) % (m // g) if m // g > 1 else 0
        x += mod * t
        mod = mod // g * m
        x %= mod
        seen.append((m, r))
    return x, mod


def primes_below(bound: int) -> list:
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if bound < 3:
        return []
    sieve = bytearray([1]) * bound
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(bound - 1) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(range(p * p, bound, p)))
    return [i for i, flag in enumerate(sieve) if flag]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


def prime_factors(n: int) -> list:
    """Distinct prime factors of ``|n|`` in ascending order (trial division)."""
    n = abs(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out
