"""Exact binomials, rational products and guarded floors of irrational values.

Everything here is pure. Floating point only appears inside the guarded
floor/ceiling evaluators, which escalate to high-precision decimal arithmetic
whenever a double result lands close to an integer boundary.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

# double results closer than this to an integer are re-evaluated
GUARD_BAND = 1e-9
# decimal working precisions tried after the double pass
PRECISION_TIERS = (50, 100)

CONJECTURE_VARIANTS = ("a", "b", "c", "d")


def binomial(n: int, k: int) -> int:
    """C(n, k) for nonnegative n, k; zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial expects nonnegative arguments, got ({n}, {k})")
    if k > n:
        return 0
    return math.comb(n, k)


def shifted_binomial(d: int, r: int) -> int:
    """Binomial with a possibly negative upper argument and even lower index.

    For d < 0 this is C(-d + r - 1, r), which is what the generalized
    binomial d(d-1)...(d-r+1)/r! evaluates to when r is even.
    """
    if r < 2 or r % 2:
        raise ValueError(f"lower index must be even and >= 2, got {r}")
    if d >= 0:
        return binomial(d, r)
    return binomial(-d + r - 1, r)


def conjecture_index_range(variant: str, s: int) -> tuple[int, int, int]:
    """(first j, last j, numerator shift) of the product for a variant."""
    if variant == "a":
        return 1, 2 * s, 2 * s + 1
    if variant == "b":
        return 1, 2 * s + 1, 2 * s + 2
    if variant == "c":
        return 0, 2 * s - 1, 2 * s
    if variant == "d":
        return 2, 2 * s + 1, 2 * s + 2
    raise ValueError(f"unknown conjecture variant {variant!r}")


def conjecture_product(variant: str, s: int, k: int) -> Fraction:
    """Exact value of prod_j (1 + shift/(k - j)) over the variant's range.

    ``s = 0`` is accepted (the ranges are then empty except for variant b).
    """
    if s < 0:
        raise ValueError(f"s must be nonnegative, got {s}")
    lo, hi, shift = conjecture_index_range(variant, s)
    if k <= max(hi, lo - 1):
        raise ValueError(
            f"k={k} must exceed the largest index {hi} of variant {variant}"
        )
    num, den = 1, 1
    for j in range(lo, hi + 1):
        num *= k - j + shift
        den *= k - j
    return Fraction(num, den)


@dataclass(frozen=True)
class GuardedFloorResult:
    value: int
    certified: bool
    # distance of the evaluated real from the nearest integer
    margin: float
    # decimal digits of the pass that decided the result; 0 means double/exact
    precision: int = 0


def _distance_to_integer(x) -> float:
    frac = x - math.floor(x)
    return float(min(frac, 1 - frac))


def guarded_floor(as_float, as_decimal) -> GuardedFloorResult:
    """Floor of a real given two evaluators.

    ``as_float()`` returns a double approximation; ``as_decimal(digits)``
    returns a Decimal accurate to roughly ``digits`` significant digits. The
    double result is trusted only outside the guard band; otherwise the
    decimal evaluator is tried at each precision tier.
    """
    x = as_float()
    margin = _distance_to_integer(x)
    if margin > GUARD_BAND:
        return GuardedFloorResult(math.floor(x), True, margin, 0)
    for digits in PRECISION_TIERS:
        y = as_decimal(digits)
        margin = _distance_to_integer(y)
        # generous: ten digits of slack for accumulated rounding and magnitude
        if Decimal(margin) > Decimal(10) ** (-(digits - 10) + _magnitude(y)):
            return GuardedFloorResult(math.floor(y), True, margin, digits)
    return GuardedFloorResult(math.floor(y), False, margin, PRECISION_TIERS[-1])


def _magnitude(y: Decimal) -> int:
    return max(0, len(str(abs(int(y)))))


def _ln2_times_sqrt(k: int, digits: int) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = digits + 10
        return (Decimal(k) * Decimal(2).ln()).sqrt()


def floor_half_plus_sqrt_ln2(c_times_2: int, k: int) -> GuardedFloorResult:
    """Certified floor of c_times_2/2 + sqrt(k * ln 2)."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if k == 0:
        # rational, decided exactly
        half = Fraction(c_times_2, 2)
        return GuardedFloorResult(
            math.floor(half), True, _distance_to_integer(half), 0
        )

    def as_float():
        return c_times_2 / 2 + math.sqrt(k * math.log(2))

    def as_decimal(digits):
        with localcontext() as ctx:
            ctx.prec = digits + 10
            return Decimal(c_times_2) / 2 + _ln2_times_sqrt(k, digits)

    return guarded_floor(as_float, as_decimal)


def ceil_over_ln2(x: Fraction) -> GuardedFloorResult:
    """Certified ceiling of x / ln 2 for a positive rational x."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError("x must be positive")

    def as_float():
        return -(x.numerator / x.denominator) / math.log(2)

    def as_decimal(digits):
        with localcontext() as ctx:
            ctx.prec = digits + 10
            return -(Decimal(x.numerator) / Decimal(x.denominator)) / Decimal(2).ln()

    res = guarded_floor(as_float, as_decimal)
    return GuardedFloorResult(-res.value, res.certified, res.margin, res.precision)


def ceil_sqrt_upper_bound(n: int, m: int) -> int:
    """ceil(n + m + 1/2 - sqrt(2nm + 1/4)) without floating point.

    Rewritten as ceil((A - sqrt(D)) / 2) with A = 2(n+m)+1 and D = 8nm+1.
    With r = isqrt(D): if D = r^2 the value is (A - r)/2 and A - r is even
    (both odd); otherwise sqrt(D) lies strictly in (r, r+1) and the ceiling
    is ceil((A - r)/2). Both cases equal (A - r + 1) // 2.
    """
    if n < 1 or m < 1:
        raise ValueError(f"n and m must be positive, got ({n}, {m})")
    a = 2 * (n + m) + 1
    r = math.isqrt(8 * n * m + 1)
    return (a - r + 1) // 2
