"""Hilbert depth of S/I for the edge ideal of a complete bipartite graph K_{n,m}.

h(n, m) is the largest q <= n + m such that, for every 1 <= l <= q // 2,

    C(q - n, 2l) + C(q - m, 2l) >= C(q, 2l)

where binomials with negative upper argument follow ``shifted_binomial``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import isqrt
from typing import Optional

from .combinatorics import (
    GuardedFloorResult,
    binomial,
    ceil_sqrt_upper_bound,
    floor_half_plus_sqrt_ln2,
    shifted_binomial,
)


class UncertifiedBoundError(ArithmeticError):
    """A floor involving ln 2 could not be certified at any precision tier."""

    def __init__(self, what: str, result: GuardedFloorResult):
        super().__init__(f"{what}: floor not certified (margin {result.margin:g})")
        self.result = result


@dataclass(frozen=True)
class BipartiteCase:
    n: int
    m: int

    def __post_init__(self):
        if not (isinstance(self.n, int) and isinstance(self.m, int)):
            raise TypeError("n and m must be integers")
        if self.n < 1 or self.m < 1:
            raise ValueError(f"n and m must be positive, got ({self.n}, {self.m})")
        if self.m > self.n:
            n, m = self.m, self.n
            object.__setattr__(self, "n", n)
            object.__setattr__(self, "m", m)


def as_case(n_or_case, m: Optional[int] = None) -> BipartiteCase:
    if isinstance(n_or_case, BipartiteCase):
        return n_or_case
    return BipartiteCase(n_or_case, m)


@dataclass(frozen=True)
class CriterionFailure:
    ell: int
    left_n: int  # C(q-n, 2l)
    left_m: int  # C(q-m, 2l)
    right: int  # C(q, 2l)


@dataclass(frozen=True)
class CriterionProbe:
    q: int
    failures: tuple[CriterionFailure, ...] = field(default_factory=tuple)

    @property
    def passes(self) -> bool:
        return not self.failures

    @property
    def failing_ells(self) -> list[int]:
        return [f.ell for f in self.failures]


def _terms(case: BipartiteCase, q: int, ell: int) -> tuple[int, int, int]:
    r = 2 * ell
    return shifted_binomial(q - case.n, r), shifted_binomial(q - case.m, r), binomial(q, r)


def _check_q(case: BipartiteCase, q: int) -> None:
    if not 0 <= q <= case.n + case.m:
        raise ValueError(f"q={q} outside [0, {case.n + case.m}]")


def criterion_holds(case: BipartiteCase, q: int) -> CriterionProbe:
    """Test every l in 1..q//2 and record each failing l with its three terms."""
    _check_q(case, q)
    failures = []
    for ell in range(1, q // 2 + 1):
        a, b, c = _terms(case, q, ell)
        if a + b < c:
            failures.append(CriterionFailure(ell, a, b, c))
    return CriterionProbe(q, tuple(failures))


def first_failing_ell(case: BipartiteCase, q: int) -> Optional[int]:
    """Smallest failing l, or None when q passes. Short-circuits."""
    _check_q(case, q)
    for ell in range(1, q // 2 + 1):
        a, b, c = _terms(case, q, ell)
        if a + b < c:
            return ell
    return None


@lru_cache(maxsize=None)
def _h(n: int, m: int) -> int:
    case = BipartiteCase(n, m)
    for q in range(n + m, -1, -1):
        if first_failing_ell(case, q) is None:
            return q
    raise AssertionError("unreachable: q = 0 always passes")


def h(n: int, m: int) -> int:
    """h(n, m) by descending scan over q (no downward-closure assumption)."""
    case = BipartiteCase(n, m)
    return _h(case.n, case.m)


def h_exhaustive(n: int, m: int) -> int:
    """Max over every passing q in [0, n+m]; slow reference for ``h``."""
    case = BipartiteCase(n, m)
    return max(q for q in range(case.n + case.m + 1) if criterion_holds(case, q).passes)


def hdepth_ideal(case: BipartiteCase) -> int:
    return (case.n + case.m + 2) // 2


@dataclass(frozen=True)
class IntervalWitness:
    s: int
    t: int
    predicate_value: int

    @property
    def applies(self) -> bool:
        return self.predicate_value < 0


def t1_witness(case: BipartiteCase) -> IntervalWitness:
    """Integer form of the interval condition on m around n/2.

    n = 2s,   m = s + t:      t^2 - t - 2s < 0      gives h = s
    n = 2s+1, m = s + 1 + t:  t^2 - t - 4s - 2 < 0  gives h = s + 1
    """
    n, m = case.n, case.m
    s = n // 2
    if n % 2 == 0:
        t = m - s
        return IntervalWitness(s, t, t * t - t - 2 * s)
    t = m - s - 1
    return IntervalWitness(s, t, t * t - t - 4 * s - 2)


def t1_value(case: BipartiteCase) -> Optional[int]:
    w = t1_witness(case)
    if not w.applies:
        return None
    return w.s if case.n % 2 == 0 else w.s + 1


def _certified(what: str, res: GuardedFloorResult) -> int:
    if not res.certified:
        raise UncertifiedBoundError(what, res)
    return res.value


def t2_bounds(n: int) -> tuple[int, int]:
    """Sandwich for h(n, n): floor(n/2 + sqrt(k ln2)) - 1 and floor((n+1)/2 + sqrt(k ln2)), k = n // 2."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    k = n // 2
    lo = _certified(f"t2 lower bound, n={n}", floor_half_plus_sqrt_ln2(n, k)) - 1
    hi = _certified(f"t2 upper bound, n={n}", floor_half_plus_sqrt_ln2(n + 1, k))
    return lo, hi


def pop_bound(n: int) -> int:
    """floor((n-1)/2 + sqrt((n//2) ln 2)); valid only if the product conjecture holds."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return _certified(f"conditional bound, n={n}", floor_half_plus_sqrt_ln2(n - 1, n // 2))


def cipu_lower_bound_m1(n: int) -> int:
    """ceil(n/2) + isqrt(n) - 2, a known lower bound for h(n, 1)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return (n + 1) // 2 + isqrt(n) - 2


REGIME_SMALL_N = "n<=2m-2"
REGIME_LARGE_N = "n>=2m-1"


@dataclass(frozen=True)
class Regime:
    name: str
    # inclusive bounds on h implied by the regime; None when unbounded
    lower: Optional[int]
    upper: Optional[int]

    def admits(self, value: int) -> bool:
        if self.lower is not None and value < self.lower:
            return False
        return self.upper is None or value <= self.upper


def regime_classification(case: BipartiteCase) -> Regime:
    n, m = case.n, case.m
    if n <= 2 * m - 2:
        return Regime(REGIME_SMALL_N, None, m - 1)
    return Regime(REGIME_LARGE_N, m, n - m + 1)


@dataclass(frozen=True)
class HdepthReport:
    case: BipartiteCase
    h: int
    lower_half: int
    upper_sqrt: int
    ideal_hdepth: int
    t1_applicable: bool
    t1_value: Optional[int]
    t2_bounds: Optional[tuple[int, int]]
    regime: Regime
    witness_at_h: CriterionProbe
    witness_above_h: Optional[CriterionProbe]

    def as_dict(self) -> dict:
        """Flat, fixed-order mapping used by every output format."""
        above = self.witness_above_h
        return {
            "n": self.case.n,
            "m": self.case.m,
            "h": self.h,
            "lower_half": self.lower_half,
            "upper_sqrt": self.upper_sqrt,
            "ideal_hdepth": self.ideal_hdepth,
            "t1_applicable": self.t1_applicable,
            "t1_value": self.t1_value,
            "t2_lo": self.t2_bounds[0] if self.t2_bounds else None,
            "t2_hi": self.t2_bounds[1] if self.t2_bounds else None,
            "regime": self.regime.name,
            "regime_lower": self.regime.lower,
            "regime_upper": self.regime.upper,
            "witness_q": above.q if above else None,
            "witness_failures": [
                {"ell": f.ell, "left_n": str(f.left_n), "left_m": str(f.left_m),
                 "right": str(f.right)}
                for f in (above.failures if above else ())
            ],
        }


def hdepth_quotient(case: BipartiteCase) -> HdepthReport:
    value = _h(case.n, case.m)
    top = case.n + case.m
    t1 = t1_value(case)
    return HdepthReport(
        case=case,
        h=value,
        lower_half=(case.n + 1) // 2,
        upper_sqrt=ceil_sqrt_upper_bound(case.n, case.m),
        ideal_hdepth=hdepth_ideal(case),
        t1_applicable=t1 is not None,
        t1_value=t1,
        t2_bounds=t2_bounds(case.n) if case.n == case.m and case.n >= 2 else None,
        regime=regime_classification(case),
        witness_at_h=criterion_holds(case, value),
        witness_above_h=criterion_holds(case, value + 1) if value < top else None,
    )
