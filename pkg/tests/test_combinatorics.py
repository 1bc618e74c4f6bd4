import math
from decimal import Decimal
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp, mpf, sqrt as mpsqrt, log as mplog, floor as mpfloor, ceil as mpceil

from hdepth.combinatorics import (
    GUARD_BAND,
    GuardedFloorResult,
    binomial,
    ceil_over_ln2,
    ceil_sqrt_upper_bound,
    conjecture_product,
    floor_half_plus_sqrt_ln2,
    guarded_floor,
    shifted_binomial,
)


def pascal(rows):
    tri = [[1]]
    for n in range(1, rows + 1):
        prev = tri[-1]
        tri.append([1] + [prev[k - 1] + prev[k] for k in range(1, n)] + [1])
    return tri


def generalized_binomial(d, r):
    num = 1
    for i in range(r):
        num *= d - i
    assert num % math.factorial(r) == 0
    return num // math.factorial(r)


@pytest.mark.parametrize("n,k,want", [(5, 2, 10), (3, 0, 1), (2, 3, 0), (0, 0, 1)])
def test_binomial_examples(n, k, want):
    assert binomial(n, k) == want


def test_binomial_matches_pascal():
    tri = pascal(60)
    for n in range(61):
        for k in range(62):
            want = tri[n][k] if k <= n else 0
            assert binomial(n, k) == want


def test_binomial_rejects_negative():
    with pytest.raises(ValueError):
        binomial(-1, 2)


@pytest.mark.parametrize("d,r,want", [(-2, 2, 3), (0, 2, 0), (5, 2, 10), (-1, 2, 1), (-3, 4, 15)])
def test_shifted_binomial_examples(d, r, want):
    assert shifted_binomial(d, r) == want


@given(st.integers(-200, -1), st.integers(1, 20))
def test_shifted_binomial_is_generalized_binomial(d, half):
    r = 2 * half
    assert shifted_binomial(d, r) == generalized_binomial(d, r)


@pytest.mark.parametrize("r", [0, 1, 3, -2])
def test_shifted_binomial_rejects_bad_lower_index(r):
    with pytest.raises(ValueError):
        shifted_binomial(4, r)


def test_conjecture_product_examples():
    assert conjecture_product("a", 1, 10) == Fraction(11, 6)
    assert conjecture_product("a", 1, 10) == (1 + Fraction(3, 9)) * (1 + Fraction(3, 8))
    assert conjecture_product("c", 1, 6) == Fraction(28, 15)
    want_b = math.prod(1 + Fraction(4, 18 - j) for j in (1, 2, 3))
    assert conjecture_product("b", 1, 18) == want_b
    want_d = math.prod(1 + Fraction(4, 13 - j) for j in (2, 3))
    assert conjecture_product("d", 1, 13) == want_d


def test_conjecture_product_lowest_terms():
    p = conjecture_product("b", 3, 82)
    assert math.gcd(p.numerator, p.denominator) == 1 and p.denominator > 0


@pytest.mark.parametrize("variant,s,k", [("a", 1, 2), ("a", 2, 4), ("b", 1, 3), ("c", 2, 3), ("d", 1, 3)])
def test_conjecture_product_rejects_k_in_range(variant, s, k):
    with pytest.raises(ValueError):
        conjecture_product(variant, s, k)


def test_conjecture_product_unknown_variant():
    with pytest.raises(ValueError):
        conjecture_product("e", 1, 50)


@given(st.sampled_from("abcd"), st.integers(1, 12), st.integers(0, 400))
def test_conjecture_product_strictly_decreasing(variant, s, offset):
    k = 2 * s + 2 + offset
    assert conjecture_product(variant, s, k + 1) < conjecture_product(variant, s, k)


@pytest.mark.parametrize(
    "c2,K,want",
    [(100, 50, 55), (101, 50, 56), (99, 50, 55), (0, 0, 0), (2, 1, 1), (3, 1, 2), (4, 2, 3), (5, 2, 3),
     (-1, 1, 0), (1, 0, 0), (-3, 0, -2)],
)
def test_floor_half_plus_sqrt_ln2_examples(c2, K, want):
    res = floor_half_plus_sqrt_ln2(c2, K)
    assert res.certified
    assert res.value == want


def _mp_floor(c2, K):
    with mp.workdps(100):
        return int(mpfloor(mpf(c2) / 2 + mpsqrt(K * mplog(2))))


def test_floor_half_plus_sqrt_ln2_against_100_digits():
    for K in range(0, 10_001):
        c2 = K % 7 - 3 + 2 * (K % 11)
        res = floor_half_plus_sqrt_ln2(c2, K)
        assert res.certified
        assert res.value == _mp_floor(c2, K), (c2, K)


@settings(max_examples=300)
@given(st.integers(-10**6, 10**6), st.integers(0, 10**12))
def test_floor_half_plus_sqrt_ln2_never_wrong_when_certified(c2, K):
    res = floor_half_plus_sqrt_ln2(c2, K)
    if res.certified:
        assert res.value == _mp_floor(c2, K)


def test_guarded_floor_escalates_near_integers():
    # 3 - 1e-12 sits inside the guard band of a double evaluation
    res = guarded_floor(lambda: 3 - 1e-12, lambda digits: Decimal(3) - Decimal("1e-12"))
    assert res.certified and res.value == 2 and res.precision == 50
    assert res.margin < GUARD_BAND


def test_guarded_floor_reports_uncertified():
    res = guarded_floor(lambda: 5.0, lambda digits: Decimal(5))
    assert isinstance(res, GuardedFloorResult)
    assert not res.certified


def test_ceil_over_ln2_examples():
    assert ceil_over_ln2(Fraction(25, 4)).value == 10
    assert ceil_over_ln2(Fraction(4)).value == 6
    assert ceil_over_ln2(Fraction(49, 4)).value == 18
    assert ceil_over_ln2(Fraction(9)).value == 13
    with mp.workdps(60):
        for x in range(1, 400):
            assert ceil_over_ln2(Fraction(x, 4)).value == int(mpceil(mpf(x) / 4 / mplog(2)))


@pytest.mark.parametrize("n,m,want", [(1, 1, 1), (2, 1, 2), (3, 3, 3), (10, 5, 6), (100, 100, 60), (7, 2, 5)])
def test_ceil_sqrt_upper_bound_examples(n, m, want):
    assert ceil_sqrt_upper_bound(n, m) == want


def _ceil_bound_oracle(n, m):
    # exact: ceil(y) for y = n + m + 1/2 - sqrt(2nm + 1/4) is the least integer c with
    # c >= y, i.e. 2(n+m) + 1 - 2c <= sqrt(8nm+1)
    d = 8 * n * m + 1
    c = 0
    while True:
        lhs = 2 * (n + m) + 1 - 2 * c
        if lhs <= 0 or lhs * lhs <= d:
            return c
        c += 1


def test_ceil_sqrt_upper_bound_against_search():
    for n in range(1, 80):
        for m in range(1, 80):
            assert ceil_sqrt_upper_bound(n, m) == _ceil_bound_oracle(n, m)


@given(st.integers(1, 10**6), st.integers(1, 10**6))
def test_ceil_sqrt_upper_bound_total_and_exact(n, m):
    v = ceil_sqrt_upper_bound(n, m)
    assert isinstance(v, int)
    with mp.workdps(60):
        assert v == int(mpceil(n + m + mpf(1) / 2 - mpsqrt(2 * n * m + mpf(1) / 4)))


def test_ceil_sqrt_upper_bound_diagonal_shape():
    n = 10**5
    v = ceil_sqrt_upper_bound(n, n)
    assert n / 2 < v
    assert abs(v - (2 - math.sqrt(2)) * n) < 2
