"""Command-line surface: eval, constants, verify, integrate, bench.

Exit codes: 0 success / all checks pass, 1 verification failure,
2 usage or domain error.  JSON (--format json) is the machine interface;
schema_version "1" is documented in report.py and the README.
"""

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from . import analysis, bench, constants, exact_series, identities, report, series_kernel
from .errors import GeomfreeError

_EPS = 2.0 ** -52


def _color_enabled():
    return sys.stdout.isatty() and not os.environ.get("GEOMFREE_NO_COLOR")


def _mark(passed):
    word = "PASS" if passed else "FAIL"
    if _color_enabled():
        code = "32" if passed else "31"
        return f"\x1b[{code}m{word}\x1b[0m"
    return word


def _print_json(obj):
    print(json.dumps(obj, indent=2, sort_keys=True))


# --- eval ---------------------------------------------------------------

def cmd_eval(args):
    fns = {
        "sin": lambda x, tol: series_kernel.sin_eval(x, tol),
        "cos": lambda x, tol: series_kernel.cos_eval(x, tol),
        "arcsin": lambda x, tol: analysis.arcsin_newton(x, tol),
    }
    cv = fns[args.function](args.x, args.tol)
    if args.format == "json":
        _print_json({
            "function": args.function,
            "x": args.x,
            "value": cv.value,
            "abs_error_bound": cv.abs_error_bound,
        })
    else:
        print(f"{cv.value:.17g} ± {cv.abs_error_bound:.1e}")
    return 0


# --- constants ----------------------------------------------------------

def cmd_constants(args):
    if not (1 <= args.digits <= 15):
        print("error: --digits must be between 1 and 15", file=sys.stderr)
        return 2
    tbl = constants.shared_table()
    if args.format == "json":
        _print_json({
            "q": tbl.q,
            "pi": tbl.pi,
            "bracket_radius": tbl.certified_bound,
            "q_multiples": [list(row) for row in tbl.q_multiples],
        })
        return 0
    d = args.digits
    print(f"Q  = {tbl.q:.{d}f}")
    print(f"pi = {tbl.pi:.{d}f}")
    print(f"certified bracket radius = {tbl.certified_bound:.3g}")
    print("k   sin kQ   cos kQ")
    for k, s, c in tbl.q_multiples:
        print(f"{k}   {s:6d}   {c:6d}")
    return 0


# --- verify -------------------------------------------------------------

def _cos2_certificate():
    """Exact certification that cos 2 <= -131/315 from a 4-term partial sum."""
    partial, bound = series_kernel.cos_eval_exact(Fraction(2), 4)
    ok = (partial == Fraction(-19, 45)
          and bound == Fraction(2, 315)
          and partial + bound <= Fraction(-131, 315))
    return report.CheckResult(
        name="cos2_certified_negative",
        kind="exact",
        passed=ok,
        detail={"partial_sum": str(partial), "bound": str(bound),
                "certified_upper": str(partial + bound)},
        samples=1,
    )


def _coefficient_recursion_check(n_max=200):
    """Recursion-generated coefficients match the series coefficients."""
    coeffs = series_kernel.ode_coefficients(n_max + 1)
    series = exact_series.truncated_sin(n_max)
    ok = all(coeffs[n] == series.coefficient(n) for n in range(n_max + 1))
    return report.CheckResult(
        name=f"coefficient_recursion_n_le_{n_max}",
        kind="exact",
        passed=ok,
        detail={"residual": "0"} if ok else {"residual": "mismatch"},
        samples=n_max + 1,
    )


def _special_angle_check():
    """Float table values agree with the exact radicals to <= 2 ulp and
    satisfy sin^2 + cos^2 = 1 to the same precision."""
    table = identities.special_angles()
    refs = {
        "0": (0.0, 1.0),
        "pi/6": (0.5, float(identities._isqrt_fraction(Fraction(3, 4)))),
        "pi/4": (float(identities._isqrt_fraction(Fraction(1, 2))),) * 2,
        "pi/3": (float(identities._isqrt_fraction(Fraction(3, 4))), 0.5),
        "pi/2": (1.0, 0.0),
    }
    worst = 0.0
    for e in table.entries:
        rs, rc = refs[e.label]
        worst = max(worst, abs(e.sin_value - rs), abs(e.cos_value - rc),
                    abs(e.sin_value ** 2 + e.cos_value ** 2 - 1.0) / 2.0)
    ok = worst <= 2.0 * _EPS
    return report.CheckResult(
        name="special_angles_table",
        kind="numeric",
        passed=ok,
        detail={"max_discrepancy": worst, "bound": 2.0 * _EPS},
        samples=len(table.entries),
    )


def _q_multiples_check():
    expected = ((0, 0, 1), (1, 1, 0), (2, 0, -1), (3, -1, 0), (4, 0, 1))
    got = constants.q_multiples_table()
    return report.CheckResult(
        name="q_multiples_table",
        kind="exact",
        passed=got == expected,
        detail={"residual": "0"} if got == expected else {"got": str(got)},
        samples=5,
    )


def _sin_q_check():
    tbl = constants.shared_table()
    cv = series_kernel.sin_eval(tbl.q, 1e-15)
    bound = cv.abs_error_bound + tbl.q_float_err
    disc = abs(cv.value - 1.0)
    return report.CheckResult(
        name="sin_q_equals_one",
        kind="numeric",
        passed=disc <= bound,
        detail={"max_discrepancy": disc, "bound": bound},
        samples=1,
    )


def exact_checks(degree):
    split_n = max(0, min(20, (degree - 1) // 2))
    return [
        exact_series.verify_pythagorean(degree),
        exact_series.verify_sine_sum(max(degree, 1)),
        exact_series.verify_sine_sum_split(split_n),
        _cos2_certificate(),
        _coefficient_recursion_check(),
        _q_multiples_check(),
    ]


def numeric_checks(samples, seed):
    checks = []
    for name in identities.registered_identities():
        results = identities.check_identity(
            name, identities.default_samples(name, samples, seed))
        worst = max(results, key=lambda r: r.discrepancy)
        checks.append(report.CheckResult(
            name=f"identity_{name}",
            kind="numeric",
            passed=all(r.passed for r in results),
            detail={"max_discrepancy": worst.discrepancy,
                    "bound": worst.combined_bound,
                    "worst_sample": worst.sample_points},
            samples=len(results),
        ))
    per = identities.check_periodicity(samples)
    checks.append(report.CheckResult(
        name="periodicity_4q",
        kind="numeric",
        passed=per.passed,
        detail={"max_discrepancy": per.discrepancy, "bound": per.combined_bound},
        samples=samples,
    ))
    mini = identities.check_period_minimality(500)
    checks.append(report.CheckResult(
        name="period_minimality",
        kind="numeric",
        passed=mini.passed,
        detail={"witness_value": mini.lhs, "bound": mini.combined_bound,
                "worst_sample": mini.sample_points},
        samples=500,
    ))
    checks.append(_special_angle_check())
    checks.append(_sin_q_check())
    return checks


def cmd_verify(args):
    if args.degree > 100:
        print("error: --degree must be <= 100", file=sys.stderr)
        return 2
    if args.samples > 1_000_000:
        print("error: --samples must be <= 1e6", file=sys.stderr)
        return 2
    checks = []
    if args.suite in ("exact", "all"):
        checks.extend(exact_checks(args.degree))
    if args.suite in ("numeric", "all"):
        checks.extend(numeric_checks(args.samples, args.seed))
    rep = report.build_report(checks)
    report.validate_report(rep)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(report.report_to_json(rep))
            fh.write("\n")
    if args.format == "json":
        _print_json(rep)
    else:
        for c in checks:
            print(f"{_mark(c.passed)}  {c.name}")
        s = rep["summary"]
        print(f"{s['passed']}/{s['total']} checks passed")
    return 0 if rep["summary"]["failed"] == 0 else 1


# --- integrate ----------------------------------------------------------

def cmd_integrate(args):
    target = args.target
    vals = args.args
    if target == "quarter-circle":
        if vals:
            print("error: quarter-circle takes no positional arguments", file=sys.stderr)
            return 2
        res = analysis.quarter_circle_area(args.tol)
    elif target == "arcsin":
        if len(vals) != 1:
            print("error: integrate arcsin needs exactly one argument X", file=sys.stderr)
            return 2
        res = analysis.arcsin_quadrature(vals[0], args.tol)
    else:  # arclength
        if len(vals) != 2:
            print("error: integrate arclength needs two arguments A B", file=sys.stderr)
            return 2
        res = analysis.arc_length(vals[0], vals[1], args.tol)
    if args.format == "json":
        _print_json({
            "target": target,
            "args": vals,
            "value": res.value,
            "est_error": res.est_error,
            "evaluations": res.evaluations,
        })
    else:
        print(f"{res.value:.17g}  (est err {res.est_error:.1e}, {res.evaluations} evals)")
    return 0


# --- bench --------------------------------------------------------------

def cmd_bench(args):
    if args.n < 100:
        print("error: --n must be >= 100", file=sys.stderr)
        return 2
    if args.interval is not None and not args.interval[0] < args.interval[1]:
        print("error: bad --interval", file=sys.stderr)
        return 2
    interval = args.interval
    if interval is None:
        pi = constants.pi_value()
        interval = (-pi, pi)
    functions = tuple(f.strip() for f in args.functions.split(",") if f.strip())
    try:
        records = bench.run_bench(args.n, interval, args.seed, functions)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        _print_json([r.to_dict() for r in records])
    else:
        for r in records:
            print(f"{r.function:6s} on [{r.interval[0]:.6g}, {r.interval[1]:.6g}] "
                  f"n={r.n}  max|err|={r.max_abs_error_vs_platform:.2e}  "
                  f"self {r.ns_per_eval_self:.0f} ns/eval, "
                  f"platform {r.ns_per_eval_platform:.0f} ns/eval")
    return 0


# --- parser -------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(
        prog="geomfree",
        description="Self-contained certified trigonometric kernel "
                    "(series-built sin/cos/pi/arcsin, no platform trig).",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate a function with a certified bound")
    pe.add_argument("function", choices=["sin", "cos", "arcsin"])
    pe.add_argument("x", type=float)
    pe.add_argument("--tol", type=float, default=1e-15)
    pe.add_argument("--format", choices=["text", "json"], default="text")
    pe.set_defaults(func=cmd_eval)

    pc = sub.add_parser("constants", help="print Q, pi, and the Q-multiples table")
    pc.add_argument("--digits", type=int, default=15)
    pc.add_argument("--format", choices=["text", "json"], default="text")
    pc.set_defaults(func=cmd_constants)

    pv = sub.add_parser("verify", help="run the identity/theorem check suites")
    pv.add_argument("--suite", choices=["exact", "numeric", "all"], default="all")
    pv.add_argument("--degree", type=int, default=41)
    pv.add_argument("--samples", type=int, default=1000)
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--out", type=str, default=None)
    pv.add_argument("--format", choices=["text", "json"], default="text")
    pv.set_defaults(func=cmd_verify)

    pi = sub.add_parser("integrate", help="circle integrals and arc length")
    pi.add_argument("target", choices=["quarter-circle", "arcsin", "arclength"])
    pi.add_argument("args", type=float, nargs="*")
    pi.add_argument("--tol", type=float, default=1e-10)
    pi.add_argument("--format", choices=["text", "json"], default="text")
    pi.set_defaults(func=cmd_integrate)

    pb = sub.add_parser("bench", help="accuracy/speed vs the platform libm")
    pb.add_argument("--n", type=int, default=10000)
    pb.add_argument("--interval", type=float, nargs=2, default=None)
    pb.add_argument("--seed", type=int, default=0)
    pb.add_argument("--functions", type=str, default="sin,cos,arcsin")
    pb.add_argument("--format", choices=["text", "json"], default="text")
    pb.set_defaults(func=cmd_bench)

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GeomfreeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
