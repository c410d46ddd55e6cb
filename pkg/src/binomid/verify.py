"""Verification orchestration: symbolic equality reports, a seeded
randomized evaluation oracle, parameter sweeps, and the benchmark layer
comparing definitional sums against their closed forms.

Randomness is SplitMix64, seeded and fully documented so reports replay
byte-identically: trial ``i`` over an ``n``-variable ring consumes
outputs ``2*n*i .. 2*n*(i+1)-1`` of the stream started at ``seed``; per
variable, the first output gives the numerator ``-999 + (u % 1999)`` and
the second the denominator ``1 + (u % 99)``.
"""

from __future__ import annotations

import dataclasses
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import identities as idn
from .binomials import binom_poly
from .rings import Polynomial, Rational, Ring, op_count, rat, reset_op_count

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Steele/Lea/Flood 64-bit generator; tiny, seedable, reproducible."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)


@dataclass(frozen=True)
class PointSample:
    """A rational assignment to ring variables, replayable from (seed, index)."""

    assignments: dict[str, Rational]
    seed: int
    index: int

    @classmethod
    def draw(cls, ring: Ring, seed: int, index: int) -> "PointSample":
        gen = SplitMix64(seed)
        for _ in range(2 * len(ring) * index):
            gen.next_u64()
        assignments = {}
        for name in ring.variables:
            numerator = -999 + gen.next_u64() % 1999
            denominator = 1 + gen.next_u64() % 99
            assignments[name] = rat(numerator, denominator)
        return cls(assignments, seed, index)


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one symbolic comparison."""

    identity_name: str
    parameter: int
    equal: bool
    lhs_rendered: str
    rhs_rendered: str
    difference_rendered: str
    term_counts: tuple[int, int]
    elapsed_micros: int

    def to_dict(self) -> dict:
        return {
            "identity_name": self.identity_name,
            "parameter": self.parameter,
            "equal": self.equal,
            "lhs_rendered": self.lhs_rendered,
            "rhs_rendered": self.rhs_rendered,
            "difference_rendered": self.difference_rendered,
            "term_counts": list(self.term_counts),
            "elapsed_micros": self.elapsed_micros,
        }


@dataclass(frozen=True)
class RandomCheckReport:
    """Outcome of the randomized point oracle."""

    identity_name: str
    parameter: int
    trials: int
    seed: int
    failures: int
    first_failure: Optional[PointSample]

    def to_dict(self) -> dict:
        first = None
        if self.first_failure is not None:
            first = {
                "index": self.first_failure.index,
                "assignments": {
                    k: str(v) for k, v in self.first_failure.assignments.items()
                },
            }
        return {
            "identity_name": self.identity_name,
            "parameter": self.parameter,
            "trials": self.trials,
            "seed": self.seed,
            "failures": self.failures,
            "first_failure": first,
        }


def _compare(name: str, parameter: int, lhs: Polynomial, rhs: Polynomial,
             started: float) -> IdentityReport:
    difference = lhs - rhs
    elapsed = int((time.perf_counter() - started) * 1e6)
    return IdentityReport(
        identity_name=name,
        parameter=parameter,
        equal=difference.is_zero(),
        lhs_rendered=lhs.render(),
        rhs_rendered=rhs.render(),
        difference_rendered=difference.render(),
        term_counts=(lhs.term_count(), rhs.term_count()),
        elapsed_micros=elapsed,
    )


def verify_identity(m: int) -> IdentityReport:
    """Symbolically compare both sides of the main identity at parameter m."""
    started = time.perf_counter()
    return _compare("main", m, idn.lhs_identity(m), idn.rhs_identity(m), started)


# Lemma name -> pair of independent constructions.
_LEMMA_SIDES: dict[str, tuple[Callable[[int], Polynomial], Callable[[int], Polynomial]]] = {
    "f": (idn.f_def, idn.f_closed),
    "g": (idn.g_def, idn.g_closed),
    "jensen": (idn.jensen_lhs, idn.jensen_rhs),
    "chebyshev": (
        lambda n: idn.chebyshev_closed(n).poly,
        lambda n: idn.chebyshev_recurrence(n).poly,
    ),
    "telescope": (
        idn.telescoped_sum,
        lambda m: (idn.RING_XZ.var("x") - m) * binom_poly(idn.RING_XZ.var("x"), m),
    ),
}

LEMMA_NAMES = tuple(_LEMMA_SIDES) + ("collapse",)


def verify_lemma(name: str, parameter: int) -> IdentityReport:
    """Compare a lemma's two independent constructions.

    For ``collapse`` the parameter is the outer index j; every admissible
    inner index k (j/2 <= k <= j) is checked against the constant
    2^(2k-j), and the report shows the k=j instance.
    """
    started = time.perf_counter()
    if name == "collapse":
        j = parameter
        if j < 0:
            raise ValueError(f"collapse parameter must be >= 0, got {j}")
        ring = Ring(("z",))
        all_equal = True
        lhs = rhs = ring.one
        for k in range((j + 1) // 2, j + 1):
            lhs = idn.binomial_collapse(j, k)
            rhs = ring.const(2 ** (2 * k - j))
            all_equal = all_equal and lhs == rhs
        report = _compare(name, parameter, lhs, rhs, started)
        if not all_equal and report.equal:  # an earlier k failed
            report = dataclasses.replace(report, equal=False)
        return report
    try:
        build_lhs, build_rhs = _LEMMA_SIDES[name]
    except KeyError:
        raise ValueError(f"unknown lemma {name!r}; expected one of {LEMMA_NAMES}")
    return _compare(name, parameter, build_lhs(parameter), build_rhs(parameter), started)


# Identity name -> (ring, lhs builder, rhs builder) for the point oracle.
_POINT_TARGETS: dict[str, tuple[Ring, Callable[[int], Polynomial], Callable[[int], Polynomial]]] = {
    "main": (idn.RING_XYZ, idn.lhs_identity, idn.rhs_identity),
    "f": (idn.RING_XYZ, idn.f_def, idn.f_closed),
    "g": (idn.RING_XZ, idn.g_def, idn.g_closed),
    "jensen": (idn.RING_ABC, idn.jensen_lhs, idn.jensen_rhs),
    "telescope": (idn.RING_XZ, *_LEMMA_SIDES["telescope"]),
}


def random_point_check(identity_name: str, m: int, trials: int,
                       seed: int) -> RandomCheckReport:
    """Evaluate both sides of an identity exactly at seeded random
    rational points and count mismatches; deterministic given the seed."""
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    try:
        ring, build_lhs, build_rhs = _POINT_TARGETS[identity_name]
    except KeyError:
        raise ValueError(
            f"unknown identity {identity_name!r}; expected one of {tuple(_POINT_TARGETS)}"
        )
    return check_pair_at_points(identity_name, m, build_lhs(m), build_rhs(m),
                                ring, trials, seed)


def check_pair_at_points(identity_name: str, m: int, lhs: Polynomial,
                         rhs: Polynomial, ring: Ring, trials: int,
                         seed: int) -> RandomCheckReport:
    """Point-oracle core, also usable on externally perturbed sides."""
    failures = 0
    first_failure: Optional[PointSample] = None
    for index in range(trials):
        sample = PointSample.draw(ring, seed, index)
        if lhs.eval(sample.assignments) != rhs.eval(sample.assignments):
            failures += 1
            if first_failure is None:
                first_failure = sample
    return RandomCheckReport(identity_name, m, trials, seed, failures, first_failure)


# Parameter ranges at which each lemma suite is verified during a sweep.
LEMMA_RANGES: dict[str, range] = {
    "f": range(0, 26),
    "g": range(0, 26),
    "jensen": range(0, 21),
    "chebyshev": range(0, 51),
    "telescope": range(0, 26),
    "collapse": range(0, 21),
}


def sweep(m_max: int, jobs: int = 1) -> list[IdentityReport]:
    """verify_identity for m in 0..m_max plus every lemma suite at its
    standard range; reports come back in deterministic parameter order."""
    if m_max < 0:
        raise ValueError(f"m_max must be >= 0, got {m_max}")
    params = list(range(m_max + 1))
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(verify_identity, params))
    else:
        reports = [verify_identity(m) for m in params]
    for name, prange in LEMMA_RANGES.items():
        reports.extend(verify_lemma(name, p) for p in prange)
    return reports


@dataclass(frozen=True)
class StrategyTiming:
    strategy: str
    coeff_ops: int
    elapsed_micros: int
    values: tuple = field(repr=False, default=())

    def to_dict(self) -> dict:
        return {
            "strategy": self.strategy,
            "coeff_ops": self.coeff_ops,
            "elapsed_micros": self.elapsed_micros,
        }


@dataclass(frozen=True)
class BenchReport:
    """Definitional-sum vs closed-form cost comparison at random points.

    Coefficient-operation counts are the portable metric; wall-clock is
    informational.  ``agreed`` is true iff paired strategies returned
    identical rational values at every sample point.
    """

    m: int
    points: int
    seed: int
    strategies: tuple[StrategyTiming, ...]
    agreed: bool

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "points": self.points,
            "seed": self.seed,
            "strategies": [s.to_dict() for s in self.strategies],
            "agreed": self.agreed,
        }


_BENCH_STRATEGIES: tuple[tuple[str, Ring, Callable[[int], Polynomial]], ...] = (
    ("f_def", idn.RING_XYZ, idn.f_def),
    ("f_closed", idn.RING_XYZ, idn.f_closed),
    ("g_def", idn.RING_XZ, idn.g_def),
    ("g_closed", idn.RING_XZ, idn.g_closed),
)


def bench(m: int, points: int, seed: int) -> BenchReport:
    """Build each strategy's polynomial and evaluate it at shared seeded
    points, counting elementary coefficient operations along the way."""
    if points < 1:
        raise ValueError(f"points must be >= 1, got {points}")
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    samples = {
        ring: [PointSample.draw(ring, seed, i) for i in range(points)]
        for ring in {ring for _, ring, _ in _BENCH_STRATEGIES}
    }
    timings = []
    for name, ring, build in _BENCH_STRATEGIES:
        reset_op_count()
        started = time.perf_counter()
        poly = build(m)
        values = tuple(poly.eval(s.assignments) for s in samples[ring])
        elapsed = int((time.perf_counter() - started) * 1e6)
        timings.append(StrategyTiming(name, op_count(), elapsed, values))
    reset_op_count()
    by_name = {t.strategy: t for t in timings}
    agreed = (
        by_name["f_def"].values == by_name["f_closed"].values
        and by_name["g_def"].values == by_name["g_closed"].values
    )
    return BenchReport(m, points, seed, tuple(timings), agreed)
