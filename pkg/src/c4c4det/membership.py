"""Membership test for the value set of the C4 x| C4 integer group determinant.

The attainable values are exactly

* 16m + 1,
* (8k-3)(8l-3)(4m-1)^2 with m >= 1, 8l-3 a prime in P and k + l = m (mod 2)  (the set A),
* 2^14 p (2m+1) with p in P,
* 2^14 q^2 (2m+1) with q in P',
* 2^15 m,

where P are the primes = 5 (mod 8) and P' the primes = 3 (mod 4).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product
from typing import Any

from .numtheory import factorize, is_prime

ODD_ONE = "OddOne"
ODD_A = "OddA"
EVEN14_P = "Even14P"
EVEN14_Q = "Even14Q"
EVEN15 = "Even15"
NOT_IN_S = "NotInS"

CASES = (ODD_ONE, ODD_A, EVEN14_P, EVEN14_Q, EVEN15, NOT_IN_S)


@dataclass(frozen=True)
class Classification:
    value: int
    case: str
    params: dict[str, Any] = field(default_factory=dict)
    reason: str | None = None

    @property
    def in_s(self) -> bool:
        return self.case != NOT_IN_S

    def recompose(self) -> int:
        """Rebuild the value from the certificate parameters."""
        p = self.params
        if self.case == ODD_ONE:
            return 16 * p["m"] + 1
        if self.case == ODD_A:
            return p["u"] * p["v"] * p["w"] ** 2
        if self.case == EVEN14_P:
            return 2**14 * p["p"] * p["cofactor"]
        if self.case == EVEN14_Q:
            return 2**14 * p["q"] ** 2 * p["cofactor"]
        if self.case == EVEN15:
            return 2**15 * p["m"]
        raise ValueError("a non-member has no certificate")

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"value": self.value, "in_S": self.in_s, "case": self.case}
        out.update(self.params)
        if self.reason is not None:
            out["reason"] = self.reason
        return out


def v2(n: int) -> int | float:
    """2-adic valuation; ``math.inf`` for 0."""
    if n == 0:
        return math.inf
    return (n & -n).bit_length() - 1


def a_certificate_ok(u: int, v: int, w: int) -> bool:
    """Check (u, v, w) against the defining conditions of A."""
    if u % 8 != 5 or v % 8 != 5 or w < 3 or w % 4 != 3:
        return False
    if not is_prime(v):
        return False
    k, l, m = (u + 3) // 8, (v + 3) // 8, (w + 1) // 4
    return (k + l - m) % 2 == 0


def _square_divisors(fac) -> list[int]:
    # all w > 0 with w^2 | n
    choices = [[p**e for e in range(k // 2 + 1)] for p, k in fac.prime_powers]
    out = []
    for combo in product(*choices):
        w = 1
        for x in combo:
            w *= x
        out.append(w)
    return sorted(out)


def a_membership(n: int) -> tuple[int, int, int] | None:
    """Return a (u, v, w) certificate for n in A, or None.

    Ties are broken by smallest w, then largest prime v (smallest |u|).
    """
    if n % 16 != 9:
        return None
    fac = factorize(n)
    for w in _square_divisors(fac):
        if w < 3 or w % 4 != 3:
            continue
        rest = n // (w * w)
        for v in reversed(factorize(rest).primes()):
            if v % 8 != 5:
                continue
            u = rest // v
            if a_certificate_ok(u, v, w):
                return u, v, w
    return None


def classify(n: int) -> Classification:
    if n % 2:
        if n % 16 == 1:
            return Classification(n, ODD_ONE, {"m": (n - 1) // 16})
        if n % 16 != 9:
            return Classification(n, NOT_IN_S, reason=f"odd value = {n % 16} (mod 16)")
        cert = a_membership(n)
        if cert is None:
            return Classification(n, NOT_IN_S, reason="= 9 (mod 16) but not in A")
        u, v, w = cert
        return Classification(
            n, ODD_A,
            {"u": u, "v": v, "w": w, "k": (u + 3) // 8, "l": (v + 3) // 8, "m": (w + 1) // 4},
        )
    e = v2(n)
    if e >= 15:
        return Classification(n, EVEN15, {"m": n >> 15})
    if e < 14:
        return Classification(n, NOT_IN_S, reason=f"even value with 2-adic valuation {e} < 14")
    t = n >> 14
    fac = factorize(t)
    for p in fac.primes():
        if p % 8 == 5:
            return Classification(n, EVEN14_P, {"p": p, "cofactor": t // p})
    for q, k in fac.prime_powers:
        if q % 4 == 3 and k >= 2:
            return Classification(n, EVEN14_Q, {"q": q, "cofactor": t // (q * q)})
    return Classification(
        n, NOT_IN_S,
        reason="valuation 14 but odd part has no prime = 5 (mod 8) and no square of a prime = 3 (mod 4)",
    )
