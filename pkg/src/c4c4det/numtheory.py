"""Factorization, the prime classes P and P', and residue-constrained square sums."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd, isqrt
from typing import Iterator

from .errors import FactorizationOverflow, NoRepresentation

FACTOR_LIMIT = 1 << 63
_TRIAL_BOUND = 1000
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _small_primes(bound: int) -> list[int]:
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytes(len(range(p * p, bound + 1, p)))
    return [p for p in range(bound + 1) if sieve[p]]


SMALL_PRIMES = _small_primes(_TRIAL_BOUND)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for every n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent(n: int) -> int:
    # n is odd, composite and free of small factors
    for c in range(1, n):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed on {n}")


def _split(n: int, out: list[int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out.append(n)
        return
    g = _brent(n)
    _split(g, out)
    _split(n // g, out)


@dataclass(frozen=True)
class Factorization:
    sign: int
    prime_powers: tuple[tuple[int, int], ...]

    def value(self) -> int:
        v = self.sign
        for p, e in self.prime_powers:
            v *= p**e
        return v

    def primes(self) -> list[int]:
        return [p for p, _ in self.prime_powers]


def factorize(n: int) -> Factorization:
    """Complete factorization of ``n`` with |n| < 2**63; primes in increasing order."""
    if abs(n) >= FACTOR_LIMIT:
        raise FactorizationOverflow(n)
    if n == 0:
        return Factorization(0, ())
    sign = 1 if n > 0 else -1
    n = abs(n)
    found: list[int] = []
    for p in SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            found.append(p)
            n //= p
    if n > 1:
        _split(n, found)
    counts: dict[int, int] = {}
    for p in found:
        counts[p] = counts.get(p, 0) + 1
    return Factorization(sign, tuple(sorted(counts.items())))


@dataclass(frozen=True)
class PrimeClass:
    in_p: bool
    in_pprime: bool


def prime_class(p: int) -> PrimeClass:
    """Membership in P (primes = 5 mod 8) and P' (primes = 3 mod 4)."""
    prime = is_prime(p)
    return PrimeClass(prime and p % 8 == 5, prime and p % 4 == 3)


def in_p(p: int) -> bool:
    return p % 8 == 5 and is_prime(p)


def in_pprime(p: int) -> bool:
    return p % 4 == 3 and is_prime(p)


class TwoSquarePattern(enum.Enum):
    """Residue patterns (x mod 8, y mod 8) for x^2 + y^2."""

    ODD3_EVEN2 = (3, 2)  # primes = 13 mod 16
    ODD1_EVEN2 = (1, 2)  # primes = 5 mod 16
    ODD3_ODD1 = (3, 1)   # 2p with p in P


@dataclass(frozen=True)
class TwoSquareRep:
    x: int
    y: int
    pattern: TwoSquarePattern

    def check(self, target: int) -> bool:
        rx, ry = self.pattern.value
        return self.x**2 + self.y**2 == target and self.x % 8 == rx and self.y % 8 == ry


def _prime_two_squares(p: int) -> tuple[int, int]:
    """x^2 + y^2 = p for a prime p = 1 mod 4 (Hermite-Serret descent)."""
    c = 2
    while pow(c, (p - 1) // 2, p) != p - 1:
        c += 1
    a, b = p, pow(c, (p - 1) // 4, p)
    limit = isqrt(p)
    while b > limit:
        a, b = b, a % b
    y = isqrt(p - b * b)
    assert b * b + y * y == p
    return b, y


def _to_class(x: int, residue: int, mod: int) -> int:
    if x % mod == residue:
        return x
    if -x % mod == residue:
        return -x
    raise AssertionError(f"{x} cannot be normalized to {residue} mod {mod}")


def two_squares(target: int, pattern: TwoSquarePattern) -> TwoSquareRep:
    if pattern is TwoSquarePattern.ODD3_ODD1:
        if target % 2 or not in_p(target // 2):
            raise NoRepresentation(f"{target} is not 2p with p a prime = 5 mod 8")
        x, y = _prime_two_squares(target // 2)
        x, y = x + y, abs(x - y)
    else:
        want = 13 if pattern is TwoSquarePattern.ODD3_EVEN2 else 5
        if target % 16 != want or not is_prime(target):
            raise NoRepresentation(f"{target} is not a prime = {want} mod 16")
        x, y = _prime_two_squares(target)
    rx, ry = pattern.value
    # Odd squares mod 16 separate +-1 from +-3 mod 8, so a swap fixes which slot is which.
    if x % 2 != rx % 2 or (x * x) % 16 != (rx * rx) % 16:
        x, y = y, x
    rep = TwoSquareRep(_to_class(x, rx, 8), _to_class(y, ry, 8), pattern)
    assert rep.check(target)
    return rep


class FourSquarePattern(enum.Enum):
    """Residues mod 4 of (x1, x2, x3, x4)."""

    ONES_TWO = (1, 1, 1, 2)    # targets = 7 mod 8
    ONES_ZERO = (1, 1, 1, 0)   # targets = 3 mod 8
    ONE_ZERO_ONE_TWO = (1, 0, 1, 2)  # 2q with q in P'


@dataclass(frozen=True)
class FourSquareRep:
    x1: int
    x2: int
    x3: int
    x4: int
    pattern: FourSquarePattern

    def components(self) -> tuple[int, int, int, int]:
        return self.x1, self.x2, self.x3, self.x4

    def check(self, target: int) -> bool:
        xs = self.components()
        return sum(x * x for x in xs) == target and all(
            x % 4 == r for x, r in zip(xs, self.pattern.value)
        )


def _residue_candidates(residue: int, bound: int) -> Iterator[int]:
    """Integers = residue mod 4 with |x| <= bound, by increasing |x|, positive first."""
    for m in range(bound + 1):
        if m % 4 == residue:
            yield m
        if m and -m % 4 == residue:
            yield -m


def four_squares(target: int, pattern: FourSquarePattern) -> FourSquareRep:
    if pattern is FourSquarePattern.ONES_TWO:
        ok = target > 0 and target % 8 == 7
    elif pattern is FourSquarePattern.ONES_ZERO:
        ok = target > 0 and target % 8 == 3
    else:
        ok = target % 2 == 0 and in_pprime(target // 2)
    if not ok:
        raise NoRepresentation(f"{target} is not admissible for {pattern.name}")
    r1, r2, r3, r4 = pattern.value
    for x4 in _residue_candidates(r4, isqrt(target)):
        rem4 = target - x4 * x4
        for x3 in _residue_candidates(r3, isqrt(rem4)):
            rem3 = rem4 - x3 * x3
            for x2 in _residue_candidates(r2, isqrt(rem3)):
                rem2 = rem3 - x2 * x2
                x1 = isqrt(rem2)
                if x1 * x1 == rem2 and x1 % 2 == 1:
                    rep = FourSquareRep(_to_class(x1, r1, 4), x2, x3, x4, pattern)
                    assert rep.check(target)
                    return rep
    raise NoRepresentation(f"no {pattern.name} representation of {target} found")
