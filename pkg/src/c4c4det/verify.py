"""Property and scan harness over sampled or enumerated 16-tuples.

Work is cut into fixed-size blocks; block ``i`` of a random scan draws from a
generator seeded by ``(seed, i)``. Shards only decide which process evaluates a
block, so reports are identical for any shard count.
"""
from __future__ import annotations

import math
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

import numpy as np

from . import membership as cl
from .errors import FactorizationOverflow, InternalMismatch, NotAMember
from .forms import breakdown_from_vectors, derive_vectors, stats_from_d
from .group import dG_direct
from .membership import v2
from .numtheory import factorize, is_prime
from .witness import synthesize

EXHAUSTIVE_01 = "exhaustive-01"
RANDOM_BOX = "random-box"
BLOCK_SIZE = 2048
HISTOGRAM_CAP = 1 << 16


@dataclass(frozen=True)
class ScanConfig:
    mode: str = RANDOM_BOX
    box_radius: int = 3
    samples: int = 10_000
    seed: int = 0
    shards: int = 1
    check_direct: bool = True

    def __post_init__(self):
        if self.mode not in (EXHAUSTIVE_01, RANDOM_BOX):
            raise ValueError(f"unknown scan mode {self.mode!r}")
        if self.box_radius < 0 or self.samples < 0 or self.shards < 1:
            raise ValueError("box_radius and samples must be >= 0, shards >= 1")

    @property
    def total(self) -> int:
        return 1 << 16 if self.mode == EXHAUSTIVE_01 else self.samples


@dataclass
class ScanReport:
    checked: int = 0
    violations: list[tuple[Any, str]] = field(default_factory=list)
    value_histogram: Counter = field(default_factory=Counter)
    histogram_overflow: int = 0
    guard_hits: Counter = field(default_factory=Counter)
    overflows: int = 0

    def count_value(self, value: int) -> None:
        self.value_histogram[value] += 1
        if len(self.value_histogram) > HISTOGRAM_CAP:
            self._trim()

    def _trim(self) -> None:
        # keep the HISTOGRAM_CAP smallest values; keeps merging order-independent
        keys = sorted(self.value_histogram)
        for k in keys[HISTOGRAM_CAP:]:
            self.histogram_overflow += self.value_histogram.pop(k)

    def merge(self, other: "ScanReport") -> "ScanReport":
        self.checked += other.checked
        self.violations.extend(other.violations)
        self.violations.sort(key=lambda v: (str(v[1]), repr(v[0])))
        self.value_histogram.update(other.value_histogram)
        self.histogram_overflow += other.histogram_overflow
        self.guard_hits.update(other.guard_hits)
        self.overflows += other.overflows
        if len(self.value_histogram) > HISTOGRAM_CAP:
            self._trim()
        return self

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict[str, Any]:
        return {
            "checked": self.checked,
            "ok": self.ok,
            "violations": [_violation_json(s, p) for s, p in self.violations],
            "guard_hits": dict(sorted(self.guard_hits.items())),
            "overflows": self.overflows,
            "histogram_overflow": self.histogram_overflow,
            "value_histogram": {str(k): v for k, v in sorted(self.value_histogram.items())},
        }


def _violation_json(subject, prop: str) -> dict[str, Any]:
    if isinstance(subject, tuple):
        return {"tuple": list(subject), "property": prop}
    return {"value": subject, "property": prop}


def block_tuples(cfg: ScanConfig, block: int) -> list[tuple[int, ...]]:
    start = block * BLOCK_SIZE
    stop = min(start + BLOCK_SIZE, cfg.total)
    if cfg.mode == EXHAUSTIVE_01:
        return [tuple((i >> j) & 1 for j in range(16)) for i in range(start, stop)]
    rng = np.random.default_rng([cfg.seed, block])
    r = cfg.box_radius
    draws = rng.integers(-r, r + 1, size=(stop - start, 16))
    return [tuple(row) for row in draws.tolist()]


def _has_p_factor(x: int) -> bool:
    return any(p % 8 == 5 for p in factorize(x).primes())


def check_tuple_properties(a: Sequence[int], report: ScanReport, check_direct: bool = True) -> int:
    """Evaluate every factorization/congruence law on ``a``; returns the determinant value."""
    a = tuple(a)
    vec = derive_vectors(a)
    b, c, d = vec.b, vec.c, vec.d
    fb = breakdown_from_vectors(vec)
    st = stats_from_d(d)
    d4b, d4c, n0, n1 = fb.d4b, fb.d4c, fb.n0, fb.n1
    f = n0 * n1
    prod = d4b * d4c
    total = fb.total
    bad: list[str] = []

    def need(cond: bool, name: str) -> None:
        if not cond:
            bad.append(name)

    if check_direct:
        need(dG_direct(a) == total, "factorization")
    need(total % 2 == d4b % 2 == d4c % 2 == f % 2, "parity_chain")
    need(d4b % 2 == sum(b) % 2 and d4c % 2 == sum(c) % 2, "d4_parity")
    need(f % 2 == sum(d) % 2, "f_parity")
    need(all(
        b[i] + c[i] == 2 * (a[i] + a[i + 8]) and b[i] - c[i] == 2 * (a[i + 4] + a[i + 12])
        and b[i] % 2 == c[i] % 2 == (d[i] + d[i + 4]) % 2
        for i in range(4)
    ), "derived_vectors")
    need((b[0] * b[2] + b[1] * b[3] + c[0] * c[2] + c[1] * c[3]) % 4 == (2 * st.dstar) % 4,
         "dstar_mod4")
    need(n0 >= 0, "n0_nonnegative")

    g = report.guard_hits
    if (b[0] + b[2]) % 2 != (b[1] + b[3]) % 2:
        g["odd_split"] += 1
        need(prod % 16 == (1 - 8 * st.dstar) % 16, "d4_product_mod16")
        need(f * f % 16 == (1 - 8 * st.dstar - 8 * st.dval) % 16, "f_squared_mod16")
        need(total % 16 == (1 - 8 * st.dval) % 16, "total_mod16")
        if st.dval % 2:
            g["odd_split_dval_odd"] += 1
            need(n0 % 4 == 3 and n0 >= 3, "n0_mod4")
            need(n1 * n1 % 8 == 1, "n1_squared_mod8")
            need(f * f % 16 == (9 - 8 * st.dstar) % 16, "f_squared_mod16_dval_odd")
            need(_has_p_factor(d4b) or _has_p_factor(d4c), "d4_product_p_factor")
    elif (b[0] + b[2]) % 2 == 0:
        bsum, csum = sum(b), sum(c)
        if (bsum - csum) % 4:
            g["even_even_sums_differ"] += 1
            need(v2(prod) >= 11, "v2_d4_product_ge11")
            need(v2(f) == 2, "v2_f_eq2")
        else:
            g["even_even_sums_agree"] += 1
            need(v2(prod) >= 8, "v2_d4_product_ge8")
            need(v2(f) >= 4, "v2_f_ge4")
    else:
        g["odd_odd"] += 1
        pb = (b[0] + b[2]) * (b[1] + b[3]) % 8
        pc = (c[0] + c[2]) * (c[1] + c[3]) % 8
        if pb in (3, 5) and pc in (3, 5):
            g["odd_odd_both_pm3"] += 1
            need(v2(prod) == 8, "v2_d4_product_eq8")
        else:
            need(v2(prod) >= 9, "v2_d4_product_ge9")
        if st.dval % 4 == 2:
            g["odd_odd_dval2"] += 1
            need(v2(f) == 3, "v2_f_eq3")
        else:
            g["odd_odd_dval0"] += 1
            need(v2(f) >= 4, "v2_f_ge4")

    report.checked += 1
    report.count_value(total)
    for name in bad:
        report.violations.append((a, name))
    return total


def check_tuple_soundness(a: Sequence[int], report: ScanReport) -> int:
    a = tuple(a)
    value = dG_direct(a)
    report.checked += 1
    report.count_value(value)
    try:
        c = cl.classify(value)
    except FactorizationOverflow:
        report.overflows += 1
        return value
    report.guard_hits[c.case] += 1
    if not c.in_s:
        report.violations.append((a, "not_in_S"))
    elif c.recompose() != value:
        report.violations.append((a, "certificate_mismatch"))
    return value


def _property_block(args) -> ScanReport:
    cfg, block = args
    rep = ScanReport()
    for a in block_tuples(cfg, block):
        check_tuple_properties(a, rep, cfg.check_direct)
    return rep


def _soundness_block(args) -> ScanReport:
    cfg, block = args
    rep = ScanReport()
    for a in block_tuples(cfg, block):
        check_tuple_soundness(a, rep)
    return rep


def _run_blocks(cfg: ScanConfig, worker: Callable[[Any], ScanReport]) -> ScanReport:
    nblocks = math.ceil(cfg.total / BLOCK_SIZE)
    jobs = [(cfg, i) for i in range(nblocks)]
    report = ScanReport()
    if cfg.shards <= 1 or nblocks <= 1:
        parts: Iterable[ScanReport] = map(worker, jobs)
    else:
        with ProcessPoolExecutor(max_workers=cfg.shards) as pool:
            parts = list(pool.map(worker, jobs))
    for part in parts:
        report.merge(part)
    return report


def run_property_suite(cfg: ScanConfig) -> ScanReport:
    return _run_blocks(cfg, _property_block)


def soundness_scan(cfg: ScanConfig) -> ScanReport:
    return _run_blocks(cfg, _soundness_block)


def a_elements(bound: int) -> set[int]:
    """All members of A with |n| <= bound, by enumerating (u, v, w) certificates."""
    out: set[int] = set()
    w = 3
    while 3 * 5 * w * w <= bound:
        v = 5
        while 3 * v * w * w <= bound:
            if is_prime(v):
                umax = bound // (v * w * w)
                # u = 5 (mod 8), |u| <= umax
                for u in range(-umax + (5 + umax) % 8, umax + 1, 8):
                    if cl.a_certificate_ok(u, v, w):
                        out.add(u * v * w * w)
            v += 8
        w += 4
    return out


def completeness_targets(odd_bound: int, even_cofactor_bound: int, a_bound: int | None = None) -> list[int]:
    a_bound = odd_bound if a_bound is None else a_bound
    targets = set(range(-(odd_bound // 16) * 16 + 1, odd_bound + 1, 16))
    targets = {n for n in targets if abs(n) <= odd_bound}
    targets |= a_elements(a_bound)
    for t in range(-even_cofactor_bound, even_cofactor_bound + 1):
        if t % 2 and cl.classify(2**14 * t).in_s:
            targets.add(2**14 * t)
    targets |= {2**15 * m for m in range(-even_cofactor_bound, even_cofactor_bound + 1)}
    return sorted(targets)


def completeness_scan(odd_bound: int, even_cofactor_bound: int, a_bound: int | None = None) -> ScanReport:
    """Synthesize and re-verify a witness for every member value within the bounds."""
    report = ScanReport()
    for n in completeness_targets(odd_bound, even_cofactor_bound, a_bound):
        report.checked += 1
        try:
            w = synthesize(n)
        except (NotAMember, InternalMismatch, ValueError) as exc:
            report.violations.append((n, type(exc).__name__))
            continue
        report.guard_hits[w.construction.split(" ")[0]] += 1
        if not w.verified or dG_direct(w.tuple) != n:
            report.violations.append((n, "roundtrip"))
        else:
            report.count_value(n)
    return report


def default_shards() -> int:
    return os.cpu_count() or 1
