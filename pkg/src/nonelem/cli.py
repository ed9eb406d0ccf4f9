"""Command-line front end.

    nonelem eval      --family exp --lambda -1 --beta 2 --alpha 2 --x 1
    nonelem definite  --family cos --lambda 1 --beta 1 --alpha 3 --a 1 --b 2 --method both
    nonelem formula   --family exp --lambda -1 --beta 1 --alpha 2.7
    nonelem selftest

Exit codes: 0 success, 1 usage or parse error, 2 numeric non-convergence,
3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from .integrals import antiderivative, decompose, emit_formula, encode_number
from .oracle import QUAD_REL_FLOOR, adaptive_quadrature, compare_definite, integrand
from .series import Family, IntegralSpec

EXIT_OK, EXIT_USAGE, EXIT_NONCONVERGED, EXIT_MISMATCH = 0, 1, 2, 3
DEFAULT_TOL = 1e-12


class UsageError(Exception):
    pass


def _default_tol() -> float:
    raw = os.environ.get("NONELEM_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise UsageError(f"NONELEM_TOL is not a number: {raw!r}")
    if not (tol > 0 and math.isfinite(tol)):
        raise UsageError("NONELEM_TOL must be positive")
    return tol


def _finite(text: str) -> float:
    v = float(text)
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"not finite: {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nonelem", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def integral_args(p):
        p.add_argument("--family", required=True, choices=[f.value for f in Family])
        p.add_argument("--lambda", dest="lam", required=True)
        p.add_argument("--beta", required=True)
        p.add_argument("--alpha", required=True)

    def common(p):
        p.add_argument("--tol", type=_finite, default=None)
        p.add_argument("--output", choices=["text", "json"], default="json")

    p = sub.add_parser("eval", help="evaluate the primitive at x")
    integral_args(p)
    p.add_argument("--x", type=_finite, required=True)
    common(p)

    p = sub.add_parser("definite", help="definite integral over [a, b]")
    integral_args(p)
    p.add_argument("--a", type=_finite, required=True)
    p.add_argument("--b", type=_finite, required=True)
    p.add_argument("--method", choices=["formula", "quadrature", "both"], default="formula")
    common(p)

    p = sub.add_parser("formula", help="print the closed form")
    integral_args(p)
    p.add_argument("--output", choices=["text", "json"], default="text")

    p = sub.add_parser("selftest", help="run the fixture grid and errata regressions")
    p.add_argument("--output", choices=["text", "json"], default="text")
    return parser


def _spec(args) -> IntegralSpec:
    try:
        spec = IntegralSpec(args.family, args.lam, args.beta, args.alpha)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc))
    if not spec.alpha > 1:
        raise UsageError("alpha must be > 1")
    return spec


def _header(spec: IntegralSpec) -> dict:
    return {
        "family": spec.family.value,
        "lambda": encode_number(spec.lam),
        "beta": encode_number(spec.beta),
        "alpha": encode_number(spec.alpha),
        "decomposition": decompose(spec.family, spec.alpha, spec.beta).as_dict(),
    }


def _strict(v):
    # JSON has no inf/nan; overflowed quantities are written as null
    if isinstance(v, float) and not math.isfinite(v):
        return None
    if isinstance(v, dict):
        return {k: _strict(x) for k, x in v.items()}
    if isinstance(v, list):
        return [_strict(x) for x in v]
    return v


def _emit(report: dict, output: str, text: str) -> None:
    if output == "json":
        print(json.dumps(_strict(report), sort_keys=True, allow_nan=False))
    else:
        print(text)


def cmd_eval(args, tol) -> int:
    spec = _spec(args)
    if not args.x > 0:
        raise UsageError("x must be positive")
    res = antiderivative(spec, args.x, tol)
    report = {"subcommand": "eval", **_header(spec), "x": args.x, **res.as_dict()}
    _emit(report, args.output,
          f"F({args.x!r}) = {res.value!r}  (+/- {res.abs_error_estimate:.2e}, "
          f"{res.terms_used} terms, {res.digits_lost:.1f} digits lost)")
    return EXIT_OK if res.converged else EXIT_NONCONVERGED


def cmd_definite(args, tol) -> int:
    spec = _spec(args)
    if not 0 < args.a < args.b:
        raise UsageError("definite requires 0 < a < b")
    report = {"subcommand": "definite", **_header(spec), "a": args.a, "b": args.b, "method": args.method}
    if args.method == "formula":
        fa, fb = antiderivative(spec, args.a, tol), antiderivative(spec, args.b, tol)
        value = fb.value - fa.value
        converged = fa.converged and fb.converged
        report.update(value=value, abs_error_estimate=fa.abs_error_estimate + fb.abs_error_estimate,
                      digits_lost=max(fa.digits_lost, fb.digits_lost),
                      terms_used=max(fa.terms_used, fb.terms_used), converged=converged)
        _emit(report, args.output, f"{value!r}")
        return EXIT_OK if converged else EXIT_NONCONVERGED
    if args.method == "quadrature":
        q = adaptive_quadrature(integrand(spec), args.a, args.b, tol=1e-300, rel_tol=max(tol, QUAD_REL_FLOOR))
        report.update(q.as_dict())
        _emit(report, args.output, f"{q.value!r}  (+/- {q.abs_error_estimate:.2e})")
        return EXIT_OK if q.converged else EXIT_NONCONVERGED
    cmp = compare_definite(spec, args.a, args.b, tol=tol)
    report["comparison"] = cmp.as_dict()
    _emit(report, args.output,
          f"{'pass' if cmp.passed else 'FAIL'}: formula {cmp.formula_value!r} vs quadrature "
          f"{cmp.oracle_value!r} (rel gap {cmp.rel_gap:.2e}, tol {tol:.0e})"
          + ("  [precision loss]" if cmp.precision_loss else ""))
    if not (cmp.formula["converged"] and cmp.oracle["converged"]):
        return EXIT_NONCONVERGED
    return EXIT_OK if cmp.passed else EXIT_MISMATCH


def cmd_formula(args) -> int:
    spec = _spec(args)
    doc = emit_formula(spec, args.output)
    print(doc.dumps())
    return EXIT_OK


def cmd_selftest(args) -> int:
    from .selftest import run_checks

    checks = run_checks()
    if args.output == "json":
        print(json.dumps([{"name": c.name, "pass": c.ok, "detail": c.detail} for c in checks], sort_keys=True))
    else:
        for c in checks:
            print(c.line())
        print(f"{sum(c.ok for c in checks)}/{len(checks)} checks passed")
    return EXIT_OK if all(c.ok for c in checks) else EXIT_MISMATCH


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        if args.subcommand == "formula":
            return cmd_formula(args)
        if args.subcommand == "selftest":
            return cmd_selftest(args)
        tol = args.tol if args.tol is not None else _default_tol()
        if not tol > 0:
            raise UsageError("tol must be positive")
        if args.subcommand == "eval":
            return cmd_eval(args, tol)
        return cmd_definite(args, tol)
    except UsageError as exc:
        print(f"nonelem: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
