"""Acceptance criteria; each prints a PASS/FAIL line, collected in the terminal summary."""
import json
import time
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE_LINES
from hdepth import bipartite as bp
from hdepth import verifier
from hdepth.cli import main
from hdepth.combinatorics import floor_half_plus_sqrt_ln2
from hdepth.verifier import Window, verify


def report_line(number, title, ok, extra=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title} {extra}".rstrip()
    ACCEPTANCE_LINES.append(line)
    print("\n" + line)


def timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def test_01_oracle_equivalence():
    r, secs = timed(lambda: verify("oracle", Window(n_max=20)))
    ok = r.ok and r.cases_checked == 100 and secs < 60
    report_line(1, "criterion h == enumerated oracle, n+m <= 20", ok,
                f"({r.cases_checked} cases, {len(r.violations)} discrepancies, {secs:.1f}s)")
    assert r.violations == [] and r.complete
    assert secs < 60


def test_02_ideal_hdepth_closed_form():
    r = verify("thm21", Window(n_max=20))
    report_line(2, "hdepth(I_{n,m}) == floor((n+m+2)/2), n+m <= 20", r.ok,
                f"({r.cases_checked} cases)")
    assert r.violations == [] and r.complete and r.cases_checked == 100


def test_03_lower_and_upper_sandwich():
    (low, up), secs = timed(lambda: (verify("cor24", Window(n_max=60)),
                                     verify("thm22", Window(n_max=60))))
    ok = low.ok and up.ok and secs < 30
    report_line(3, "ceil(n/2) <= h <= sqrt upper bound, m <= n <= 60", ok,
                f"({low.cases_checked} cases, {secs:.2f}s)")
    assert low.violations == [] and up.violations == []
    assert low.cases_checked == up.cases_checked == 1830
    assert secs < 30


def test_04_interval_values():
    r = verify("thm31", Window(n_max=200))
    report_line(4, "integer interval predicate gives h = s or s+1, n <= 200", r.ok,
                f"({r.cases_checked} cases)")
    assert r.violations == [] and r.complete and r.cases_checked > 0


def test_05_diagonal_sandwich_certified():
    r, secs = timed(lambda: verify("thm32", Window(n_max=300)))
    ok = r.ok and r.cases_checked == 299 and secs < 120
    report_line(5, "ln 2 sandwich for h(n,n), 2 <= n <= 300, floors certified", ok,
                f"({secs:.2f}s)")
    for n in range(2, 301):
        k = n // 2
        assert floor_half_plus_sqrt_ln2(n, k).certified
        assert floor_half_plus_sqrt_ln2(n + 1, k).certified
    assert r.violations == [] and r.complete
    assert secs < 120


@pytest.mark.parametrize("part", [1, 2, 3, 4, 5])
def test_06_monotonicity_claims(part):
    r = verify(f"thm33_{part}", Window(n_max=100))
    report_line(6, f"monotonicity/symmetry claim ({part}), n <= 100", r.ok,
                f"({r.cases_checked} comparisons)")
    assert r.violations == [] and r.complete and r.cases_checked > 0


def test_07_conjecture_certificates():
    r = verify("conj41", Window(s_max=40))
    certified = sum(row["certified"] for row in r.details)
    ok = r.ok and len(r.details) == 160 and certified == 160
    report_line(7, "product inequalities a-d, s <= 40", ok, f"({certified}/160 certificates)")
    assert len(r.details) == 160 and certified == 160
    assert r.violations == [] and r.complete


def test_08_conditional_bound():
    r = verifier.pop_conditional_check(300)
    sharper = all(bp.pop_bound(n) >= bp.t2_bounds(n)[0] for n in range(2, 301))
    ok = r.ok and sharper
    report_line(8, "conditional bound h(n,n) >= floor((n-1)/2 + sqrt(k ln2)), n <= 300", ok,
                "(and not weaker than the ln 2 lower bound)")
    assert r.violations == [] and r.complete and r.conditional
    assert sharper


def test_09_m_equals_one_bound():
    r = verify("cipu_m1", Window(n_max=300))
    report_line(9, "h(n,1) >= ceil(n/2) + isqrt(n) - 2, n <= 300", r.ok)
    assert r.violations == [] and r.cases_checked == 300


def test_10_trend():
    rows = {rule: verifier.trend_ratios([300], rule)[0] for rule in ("one", "half", "n")}
    band = all(Fraction(1, 2) <= row["ratio"] <= Fraction(1, 2) + Fraction(12, 100)
               for row in rows.values())
    widths = [verifier.sandwich_width(n) for n in (50, 100, 200, 300)]
    shrinking = all(b <= a for a, b in zip(widths, widths[1:]))
    r = verify("clim_trend", Window(n_list=(50, 100, 200, 300)))
    ok = band and shrinking and r.ok
    report_line(10, "h/n in [0.5, 0.62] at n=300; sandwich width non-increasing", ok,
                "(" + ", ".join(f"{k}:{v['ratio_decimal']}" for k, v in rows.items()) + ")")
    assert band and shrinking and r.violations == []


def test_11_regression_pins_and_determinism(capsys):
    pins = {(1, 1): 1, (2, 1): 1, (2, 2): 1, (3, 1): 2, (4, 2): 2, (5, 3): 3}
    got = {k: bp.h(*k) for k in pins}
    outputs = []
    for jobs in ("1", "2", "1"):
        assert main(["verify", "t3", "--n-max", "50", "--format", "json", "--jobs", jobs]) == 0
        outputs.append(capsys.readouterr().out)
    assert main(["bipartite", "-n", "5", "-m", "3", "--format", "json"]) == 0
    single = capsys.readouterr().out
    deterministic = len(set(outputs)) == 1 and json.dumps(
        json.loads(single), separators=(",", ":")) + "\n" == single
    ok = got == pins and deterministic
    report_line(11, "regression pins and byte-identical JSON across runs and --jobs", ok)
    assert got == pins
    assert deterministic
