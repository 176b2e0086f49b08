"""Closed-form factorization of the C4 x| C4 group determinant.

With b, c, d the linear images of the 16 variables,

    D_G(a) = D4(b) * D4(c) * (n0 * n1)**2

where D4 is the C4 circulant determinant and (n0, n1) are the two quadratic
form values making up F(d). All arithmetic is exact on Python ints; congruence
helpers use Python's ``%`` which already returns values in ``[0, m)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .group import check_tuple


@dataclass(frozen=True)
class DerivedVectors:
    b: tuple[int, int, int, int]
    c: tuple[int, int, int, int]
    d: tuple[int, ...]


@dataclass(frozen=True)
class FactorBreakdown:
    d4b: int
    d4c: int
    n0: int
    n1: int
    total: int


@dataclass(frozen=True)
class CongruenceStats:
    dval: int
    dstar: int


def derive_vectors(a: Sequence[int]) -> DerivedVectors:
    a = check_tuple(a)
    lo = [a[i] + a[i + 8] for i in range(8)]
    b = tuple(lo[i] + lo[i + 4] for i in range(4))
    c = tuple(lo[i] - lo[i + 4] for i in range(4))
    d = tuple(a[i] - a[i + 8] for i in range(8))
    return DerivedVectors(b, c, d)


def d4(x0: int, x1: int, x2: int, x3: int) -> int:
    """Circulant determinant of C4 in factored form."""
    return ((x0 + x2) ** 2 - (x1 + x3) ** 2) * ((x0 - x2) ** 2 + (x1 - x3) ** 2)


def d4x2(*y: int) -> int:
    """Group determinant of C4 x C2 (variable y[r + 4s] for element (r, s))."""
    if len(y) != 8:
        raise ValueError("d4x2 takes 8 arguments")
    return d4(*(y[i] + y[i + 4] for i in range(4))) * d4(*(y[i] - y[i + 4] for i in range(4)))


def f_k(k: int, x: int, y: int, z: int, w: int) -> int:
    if k == 0:
        return x * x + y * y + z * z + w * w
    if k == 1:
        return x * x + y * y - z * z - w * w
    raise ValueError(f"f_k is defined for k in {{0, 1}}, got {k}")


def big_f(*w: int) -> tuple[int, int, int]:
    """Return (n0, n1, n0*n1) for the eight-variable form F."""
    if len(w) != 8:
        raise ValueError("big_f takes 8 arguments")
    n0 = f_k(0, w[0] - w[2], w[4] - w[6], w[1] - w[3], w[5] - w[7])
    n1 = f_k(1, w[0] + w[2], w[4] + w[6], w[1] + w[3], w[5] + w[7])
    return n0, n1, n0 * n1


def breakdown_from_vectors(v: DerivedVectors) -> FactorBreakdown:
    d4b = d4(*v.b)
    d4c = d4(*v.c)
    n0, n1, f = big_f(*v.d)
    return FactorBreakdown(d4b, d4c, n0, n1, d4b * d4c * f * f)


def dG_factored(a: Sequence[int]) -> FactorBreakdown:
    return breakdown_from_vectors(derive_vectors(a))


def stats_from_d(d: Sequence[int]) -> CongruenceStats:
    dval = (d[0] + d[2]) * (d[4] + d[6]) + (d[1] + d[3]) * (d[5] + d[7])
    dstar = d[0] * d[2] + d[4] * d[6] + d[1] * d[3] + d[5] * d[7]
    return CongruenceStats(dval, dstar)


def congruence_stats(a: Sequence[int]) -> CongruenceStats:
    return stats_from_d(derive_vectors(a).d)
