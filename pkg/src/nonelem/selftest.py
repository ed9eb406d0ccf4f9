"""Fixture grid and errata regressions run by ``nonelem selftest``.

Each errata entry pairs a published closed form that fails verification
with the derived form. The derived form is asserted; the published one is
evaluated too, and its derivative is shown not to reproduce the integrand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .integrals import antiderivative, decompose, emit_formula, primitive
from .oracle import compare_definite, integrand, richardson_derivative
from .series import IntegralSpec, PowerTerm
from .special import PFQParams, duplication_gap, pfq

F = Fraction

FIXTURE_GRID = (
    ("sin", "1", "2", "1.5"),
    ("sin", "1", "1", "4"),
    ("sinh", "1", "2", "1.5"),
    ("cos", "1", "1", "3"),
    ("cosh", "1", "1", "3"),
    ("exp", "-1", "2", "2"),
    ("exp", "-1", "1", "2.7"),
    ("exp", "1", "1", "2"),
)
SAMPLE_POINTS = (0.5, 1.0, 2.0)


def fixture_specs() -> list[IntegralSpec]:
    return [IntegralSpec(*row) for row in FIXTURE_GRID]


def _hyp(a, b, z):
    return pfq(PFQParams(tuple(a), tuple(b)), z).value


@dataclass(frozen=True)
class Erratum:
    name: str
    spec: IntegralSpec
    published: str
    derived: str
    expected_head: tuple
    expected_log: object
    expected_tail: tuple  # (t0, t0_exponent, a, b, arg_scale)
    published_value: Callable[[float], float]


ERRATA = (
    Erratum(
        name="cos_over_x5",
        spec=IntegralSpec("cos", 1, 1, 3),
        published="-x^-4/4 - x^-2/4 + ln|x|/24 + (x^2/(720*pi))*2F3(1, 1; 7/2, 4, 2; -x^2/4)",
        derived="-x^-4/4 + x^-2/4 + ln|x|/24 - (x^2/1440)*2F3(1, 1; 7/2, 4, 2; -x^2/4)",
        expected_head=((F(-1, 4), -4), (F(1, 4), -2)),
        expected_log=F(1, 24),
        expected_tail=(F(-1, 1440), 2, (1, 1), (F(7, 2), 4, 2), F(-1, 4)),
        published_value=lambda x: (
            -x ** -4 / 4 - x ** -2 / 4 + math.log(x) / 24
            + x ** 2 / (720 * math.pi) * _hyp((1, 1), (3.5, 4, 2), -x * x / 4)
        ),
    ),
    Erratum(
        name="exp_neg_x2_over_x4",
        spec=IntegralSpec("exp", -1, 2, 2),
        published="x^-3/3 - 1/x - (x/4)*2F2(1, 2; 3, 3; -x^2)",
        derived="x^-3/3 - x^-1 - (x/2)*2F2(1, 1/2; 3, 3/2; -x^2)",
        expected_head=((F(1, 3), -3), (F(-1), -1)),
        expected_log=None,
        expected_tail=(F(-1, 2), 1, (1, F(1, 2)), (3, F(3, 2)), F(-1)),
        published_value=lambda x: x ** -3 / 3 - 1 / x - x / 4 * _hyp((1, 2), (3, 3), -x * x),
    ),
    Erratum(
        name="sin_x2_over_x3_5",
        spec=IntegralSpec("sin", 1, 2, "1.5"),
        published="-x^1.5/9 - x^-2.5/2.5 + (x^5.5/(540*pi))*2F3(1, 9/8; 3, 7/2, 17/8; -x^4/4)",
        derived="-2*x^-0.5 - (x^3.5/21)*2F3(1, 7/8; 2, 5/2, 15/8; -x^4/4)",
        expected_head=((F(-2), F(-1, 2)),),
        expected_log=None,
        expected_tail=(F(-1, 21), F(7, 2), (1, F(7, 8)), (2, F(5, 2), F(15, 8)), F(-1, 4)),
        published_value=lambda x: (
            -x ** 1.5 / 9 - x ** -2.5 / 2.5
            + x ** 5.5 / (540 * math.pi) * _hyp((1, 9 / 8), (3, 3.5, 17 / 8), -x ** 4 / 4)
        ),
    ),
    Erratum(
        name="exp_neg_x_over_x3_7",
        spec=IntegralSpec("exp", -1, 1, "2.7"),
        published="x^-2.7/2.7 - x^0.3/1.8 - x^-1.7/1.7 + x^-0.7/1.4 - (x^1.3/31.2)*2F2(1, 1.3; 5, 2.3; -x)",
        derived="x^-2.7/2.7 - x^-1.7/1.7 + x^-0.7/1.4 + x^0.3/1.8 - (x^1.3/31.2)*2F2(1, 1.3; 5, 2.3; -x)",
        expected_head=((F(10, 27), F(-27, 10)), (F(-10, 17), F(-17, 10)), (F(5, 7), F(-7, 10)), (F(5, 9), F(3, 10))),
        expected_log=None,
        expected_tail=(F(-5, 156), F(13, 10), (1, F(13, 10)), (5, F(23, 10)), F(-1)),
        published_value=lambda x: (
            x ** -2.7 / 2.7 - x ** 0.3 / 1.8 - x ** -1.7 / 1.7 + x ** -0.7 / 1.4
            - x ** 1.3 / 31.2 * _hyp((1, 1.3), (5, 2.3), -x)
        ),
    ),
)


def structure_matches(err: Erratum) -> bool:
    form = primitive(err.spec.family, err.spec.lam, err.spec.beta, err.spec.alpha)
    head = tuple(PowerTerm(F(c), F(e)) for c, e in err.expected_head)
    t0, e0, a, b, scale = err.expected_tail
    tail = form.tail
    return (
        form.power_terms == head
        and form.log_coef == err.expected_log
        and (tail.t0_coef, tail.t0_exponent, tail.arg_scale) == (t0, e0, scale)
        and tail.pfq == PFQParams(tuple(F(v) for v in a), tuple(F(v) for v in b))
    )


def derivative_gap(spec: IntegralSpec, F_: Callable[[float], float], x: float) -> float:
    g = integrand(spec)(x)
    return abs(richardson_derivative(F_, x) - g) / abs(g)


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  {self.name}: {self.detail}"


def run_checks() -> list[Check]:
    checks: list[Check] = []
    for spec in fixture_specs():
        label = f"{spec.family.value}({spec.lam},{spec.beta},{spec.alpha})"
        F_ = lambda x, s=spec: antiderivative(s, x).value
        worst = max(derivative_gap(spec, F_, x) for x in SAMPLE_POINTS)
        checks.append(Check(f"derivative {label}", worst <= 1e-7, f"max rel gap {worst:.2e} (<= 1e-7)"))
        rep = compare_definite(spec, 1, 2, tol=1e-9)
        checks.append(Check(f"ftc {label}", rep.passed, f"rel gap {rep.rel_gap:.2e} (<= 1e-9)"))

    for family, alpha, beta, want in (
        ("exp", 2, 2, (1, 0)),
        ("exp", "2.7", 1, (2, F(7, 10))),
        ("cos", 3, 1, (1, 1)),
    ):
        d = decompose(family, alpha, beta)
        checks.append(Check(
            f"decompose {family} alpha={alpha} beta={beta}",
            (d.m, d.epsilon) == want,
            f"m={d.m} eps={d.epsilon} case={d.case.value}",
        ))

    worst = max(duplication_gap(k / 2) for k in range(1, 21))
    checks.append(Check("gamma duplication", worst <= 1e-13, f"max gap {worst:.2e} (<= 1e-13)"))

    for err in ERRATA:
        spec = err.spec
        ok = structure_matches(err) and emit_formula(spec).text == f"F(x) = {err.derived} + C"
        F_ = lambda x, s=spec: antiderivative(s, x).value
        derived_gap = max(derivative_gap(spec, F_, x) for x in SAMPLE_POINTS)
        published_gap = min(derivative_gap(spec, err.published_value, x) for x in SAMPLE_POINTS)
        ok = ok and derived_gap <= 1e-7 and published_gap > 1e-3
        checks.append(Check(
            f"errata {err.name}",
            ok,
            f"derived {err.derived} (derivative gap {derived_gap:.1e}); "
            f"published {err.published} (derivative gap >= {published_gap:.1e})",
        ))
    return checks
