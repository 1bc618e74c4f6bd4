"""hdepth command-line interface.

Exit codes: 0 success, 1 violations found, 2 input or precondition error,
3 budget exceeded or certification incomplete.
"""
from __future__ import annotations

import argparse
import csv
import io
import sys
from fractions import Fraction

from . import bipartite as bp
from . import sqfree, verifier
from .combinatorics import ceil_sqrt_upper_bound

EXIT_OK, EXIT_VIOLATIONS, EXIT_INPUT, EXIT_INCOMPLETE = 0, 1, 2, 3

# verify aliases; each expands to one or more checks
VERIFY_ALIASES = {
    "t1": ("thm31",),
    "t2": ("thm32",),
    "t3": ("thm33_1", "thm33_2", "thm33_3", "thm33_4", "thm33_5"),
    "conjecture": ("conj41",),
    "pop": ("pop42_conditional",),
    "cipu": ("cipu_m1",),
    "clim": ("clim_trend",),
    "regimes": ("thm23regimes",),
    "all": tuple(t for t in verifier.THEOREMS if t != "witness_ell"),
}

SCAN_COLUMNS = ("n", "m", "h", "ceil_half_n", "thm22_upper", "t1_applicable", "t1_value")


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    """'7' or '2..20' (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected N or A..B") from None


def scan_pairs(n_spec: str, m_spec: str) -> list[tuple[int, int]]:
    ns = parse_range(n_spec)
    pairs = []
    for n in ns:
        if n < 1:
            continue
        if m_spec == "half":
            ms = [n // 2]
        elif m_spec in ("equal", "n"):
            ms = [n]
        elif m_spec == "one":
            ms = [1]
        elif m_spec == "all":
            ms = range(1, n + 1)
        else:
            ms = parse_range(m_spec)
        pairs.extend((n, m) for m in ms if 1 <= m <= n)
    return sorted(set(pairs))


def _csv(rows: list[dict], columns) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow(["" if r[c] is None else _plain(r[c]) for c in columns])
    return buf.getvalue()


def _plain(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    return v


def _emit(text: str, output: str | None) -> None:
    if output:
        try:
            with open(output, "w") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {output}: {exc.strerror}") from None
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------


def cmd_bipartite(args) -> int:
    if args.n is None or args.m is None:
        raise UsageError("bipartite needs -n and -m")
    try:
        case = bp.BipartiteCase(int(args.n), int(args.m))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = bp.hdepth_quotient(case)
    d = report.as_dict()
    if args.format == "json":
        out = verifier.dumps(d) + "\n"
    elif args.format == "csv":
        flat = {k: v for k, v in d.items() if k != "witness_failures"}
        flat["witness_failing_l"] = " ".join(str(f["ell"]) for f in d["witness_failures"])
        out = _csv([flat], list(flat))
    else:
        lines = [f"h({case.n},{case.m}) = {report.h}"]
        for key in ("lower_half", "upper_sqrt", "ideal_hdepth", "t1_applicable",
                    "t1_value", "t2_lo", "t2_hi"):
            if d[key] is not None or key in ("t1_applicable",):
                lines.append(f"  {key:<14} {verifier._cell(d[key])}")
        reg = report.regime
        lines.append(f"  {'regime':<14} {reg.name} (implies {verifier._cell(reg.lower)}"
                     f" <= h <= {verifier._cell(reg.upper)})")
        if report.witness_above_h is not None:
            lines.append(f"  witness at q={report.witness_above_h.q}: fails for l in "
                         f"{report.witness_above_h.failing_ells}")
            for f in report.witness_above_h.failures[:5]:
                lines.append(f"    l={f.ell}: {f.left_n} + {f.left_m} < {f.right}")
        else:
            lines.append("  h = n + m, no larger q to witness")
        out = "\n".join(lines) + "\n"
    _emit(out, args.output)
    return EXIT_OK


def scan_rows(pairs, jobs: int = 1) -> list[dict]:
    table = verifier.h_table(pairs, jobs)
    rows = []
    for n, m in pairs:
        t1 = bp.t1_value(bp.BipartiteCase(n, m))
        rows.append({"n": n, "m": m, "h": table[n, m], "ceil_half_n": (n + 1) // 2,
                     "thm22_upper": ceil_sqrt_upper_bound(n, m),
                     "t1_applicable": t1 is not None, "t1_value": t1})
    return rows


def cmd_scan(args) -> int:
    rows = scan_rows(scan_pairs(args.n, args.m), args.jobs)
    if args.gnuplot:
        lines = ["# n m h h/n"]
        lines += [f"{r['n']} {r['m']} {r['h']} {float(Fraction(r['h'], r['n'])):.6f}" for r in rows]
        out = "\n".join(lines) + "\n"
    elif args.format == "json":
        out = verifier.dumps(rows) + "\n"
    elif args.format == "csv":
        out = _csv(rows, SCAN_COLUMNS)
    else:
        out = verifier.render_table(rows) + "\n" if rows else "  ".join(SCAN_COLUMNS) + "\n"
    _emit(out, args.output)
    return EXIT_OK


def _window(args) -> verifier.Window:
    n_list = None
    if getattr(args, "n_list", None):
        try:
            n_list = tuple(int(x) for x in args.n_list.split(","))
        except ValueError:
            raise UsageError("--n-list expects comma-separated integers") from None
    return verifier.Window(n_max=args.n_max, n_min=args.n_min or 1, s_max=args.s_max,
                           n_list=n_list, max_cases=args.max_cases)


def run_verify(theorem: str, args) -> int:
    ids = VERIFY_ALIASES.get(theorem, (theorem,))
    for t in ids:
        if t not in verifier.THEOREMS:
            raise UsageError(f"unknown theorem {theorem!r}; choose from "
                             f"{', '.join(list(VERIFY_ALIASES) + list(verifier.THEOREMS))}")
    reports = [verifier.verify(t, _window(args), jobs=args.jobs) for t in ids]
    if args.format == "json":
        payload = [r.as_dict(args.timing) for r in reports]
        out = verifier.dumps(payload[0] if len(payload) == 1 else payload) + "\n"
    elif args.format == "csv":
        cols = ("theorem", "cases_checked", "violations", "complete", "conditional")
        out = _csv([{"theorem": r.theorem, "cases_checked": r.cases_checked,
                     "violations": len(r.violations), "complete": r.complete,
                     "conditional": r.conditional} for r in reports], cols)
    else:
        parts = [r.to_text() + (f"\n  runtime {r.runtime_s:.3f}s" if args.timing else "")
                 for r in reports]
        total = sum(len(r.violations) for r in reports)
        out = "\n".join(parts) + f"\n{total} violations\n"
    _emit(out, args.output)
    if any(r.violations for r in reports):
        return EXIT_VIOLATIONS
    return EXIT_OK if all(r.complete for r in reports) else EXIT_INCOMPLETE


def cmd_verify(args) -> int:
    return run_verify(args.theorem, args)


def cmd_conjecture(args) -> int:
    return run_verify("conjecture", args)


def cmd_general(args) -> int:
    pair = sqfree.load_pair(args.ideal_file)
    alpha = sqfree.alpha_vector(pair)
    value = sqfree.hdepth_general(alpha)
    beta = sqfree.beta_table(value, alpha)
    above = None
    if value + 1 < len(alpha):
        k, b = sqfree.first_negative_beta(value + 1, alpha)
        above = {"q": value + 1, "k": k, "beta": b}
    doc = {"num_vars": pair.num_vars, "alpha": alpha, "hdepth": value,
           "beta_at_hdepth": beta, "failing_beta": above}
    if args.format == "json":
        out = verifier.dumps(doc) + "\n"
    elif args.format == "csv":
        out = _csv([{"j": j, "alpha": a, "beta_at_hdepth": beta[j] if j < len(beta) else None}
                    for j, a in enumerate(alpha)], ("j", "alpha", "beta_at_hdepth"))
    else:
        lines = [f"alpha  {alpha}", f"hdepth {value}", f"beta^{value} {beta}"]
        if above:
            lines.append(f"q={above['q']} fails: beta_{above['k']} = {above['beta']}")
        out = "\n".join(lines) + "\n"
    _emit(out, args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hdepth",
        description="Hilbert depth of S/I for complete bipartite edge ideals, "
                    "with exhaustive checks of the known bounds.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--output", metavar="PATH")
    common.add_argument("--jobs", type=int, default=1, metavar="N")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bipartite", parents=[common], help="h(n, m) with all bounds")
    p.add_argument("-n", "--n", type=int)
    p.add_argument("-m", "--m", type=int)
    p.set_defaults(func=cmd_bipartite)

    p = sub.add_parser("scan", parents=[common], help="table of h over a range")
    p.add_argument("-n", "--n", default="1..10", help="N or A..B")
    p.add_argument("-m", "--m", default="all", help="half, equal, one, all, N or A..B")
    p.add_argument("--gnuplot", action="store_true", help="emit an n m h h/n data block")
    p.set_defaults(func=cmd_scan)

    window = argparse.ArgumentParser(add_help=False)
    window.add_argument("--n-max", type=int)
    window.add_argument("--n-min", type=int)
    window.add_argument("--s-max", type=int)
    window.add_argument("--n-list", help="comma-separated n values for the trend check")
    window.add_argument("--max-cases", type=int, help="case budget per check")
    window.add_argument("--timing", action="store_true", help="include runtimes")

    p = sub.add_parser("verify", parents=[common, window], help="check a result over a window")
    p.add_argument("theorem", help="theorem id or alias (t1, t2, t3, conjecture, pop, all, ...)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture", parents=[common, window],
                       help="certify the product inequalities (same as verify conjecture)")
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("general", parents=[common], help="hdepth of J/I from a JSON ideal pair")
    p.add_argument("ideal_file")
    p.set_defaults(func=cmd_general)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if getattr(args, "jobs", 1) < 1:
        print("hdepth: --jobs must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hdepth: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except sqfree.EnumerationCapError as exc:
        print(f"hdepth: enumeration cap: {exc}", file=sys.stderr)
        return EXIT_INCOMPLETE
    except sqfree.ContainmentError as exc:
        print(f"hdepth: containment error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except sqfree.EqualIdealsError as exc:
        print(f"hdepth: equal ideals: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except sqfree.IdealError as exc:
        print(f"hdepth: malformed ideal file: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as exc:
        print(f"hdepth: no such file: {exc.filename}", file=sys.stderr)
        return EXIT_INPUT
    except bp.UncertifiedBoundError as exc:
        print(f"hdepth: {exc}", file=sys.stderr)
        return EXIT_INCOMPLETE


if __name__ == "__main__":
    sys.exit(main())
