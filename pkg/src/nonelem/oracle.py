"""Independent reference computations used to validate the closed forms.

Nothing here looks inside an ``AntiderivativeForm``: primitives are only
evaluated through the public functions in ``nonelem.integrals``, and the
integrands are computed directly from ``math.sin``/``cos``/``exp``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Union

from .integrals import antiderivative
from .series import DomainError, Family, IntegralSpec
from .special import EPS, PFQParams

# Gauss-Kronrod 7-15 on [-1, 1], nonnegative half (QUADPACK qk15).
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
# Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5, 7).
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)

MAX_DEPTH = 50
MAX_INTERVALS = 20000
# |K15 - G7| cannot certify much below this relative level in double precision
QUAD_REL_FLOOR = 1e-12


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    abs_error_estimate: float
    subdivisions: int
    converged: bool

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "abs_error_estimate": self.abs_error_estimate,
            "subdivisions": self.subdivisions,
            "converged": self.converged,
        }


def gauss_kronrod_15(f: Callable[[float], float], a: float, b: float) -> tuple[float, float]:
    """One 15-point Kronrod estimate on [a, b] and |K15 - G7| as its error."""
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    fc = f(c)
    kron = _WGK[7] * fc
    gauss = _WG[3] * fc
    for j in range(7):
        dx = h * _XGK[j]
        fsum = f(c - dx) + f(c + dx)
        kron += _WGK[j] * fsum
        if j % 2 == 1:
            gauss += _WG[j // 2] * fsum
    return kron * h, abs((kron - gauss) * h)


def adaptive_quadrature(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-12,
    rel_tol: float = 0.0,
) -> QuadratureResult:
    """Integrate ``f`` over [a, b] by recursive bisection of GK15 panels.

    A panel is accepted when its error is within its length-proportional
    share of the target ``max(tol, rel_tol*|I|)``, where ``|I|`` is the
    single-panel estimate.
    """
    a, b = float(a), float(b)
    if a == b:
        return QuadratureResult(0.0, 0.0, 0, True)
    if not a < b:
        raise ValueError("require a < b")
    whole, whole_err = gauss_kronrod_15(f, a, b)
    target = max(tol, rel_tol * abs(whole))
    width = b - a

    values: list[float] = []
    errors: list[float] = []
    ok = True
    count = 0
    stack = [(a, b, whole, whole_err, 0)]
    while stack:
        lo, hi, val, err, depth = stack.pop()
        if err <= target * (hi - lo) / width or err <= 50 * EPS * abs(val):
            values.append(val)
            errors.append(err)
            continue
        if depth >= MAX_DEPTH or count >= MAX_INTERVALS:
            ok = False
            values.append(val)
            errors.append(err)
            continue
        mid = 0.5 * (lo + hi)
        lv, le = gauss_kronrod_15(f, lo, mid)
        rv, re_ = gauss_kronrod_15(f, mid, hi)
        count += 1
        stack.append((mid, hi, rv, re_, depth + 1))
        stack.append((lo, mid, lv, le, depth + 1))

    total_err = math.fsum(errors)
    return QuadratureResult(math.fsum(values), total_err, count, ok and total_err <= target)


def richardson_derivative(F: Callable[[float], float], x: float, h0: Optional[float] = None) -> float:
    """Central differences at h0, h0/2, h0/4 with two Richardson levels."""
    x = float(x)
    if h0 is None:
        h0 = 1e-3 * max(1.0, abs(x))
    if x - h0 <= 0:
        raise DomainError("difference stencil leaves (0, inf)")

    def central(h):
        return (F(x + h) - F(x - h)) / (2 * h)

    d1, d2, d4 = central(h0), central(h0 / 2), central(h0 / 4)
    r1 = (4 * d2 - d1) / 3
    r2 = (4 * d4 - d2) / 3
    return (16 * r2 - r1) / 15


def integrand(spec: IntegralSpec) -> Callable[[float], float]:
    """The raw integrand g(x) of ``spec`` as a float function."""
    lam, beta, alpha = float(spec.lam), float(spec.beta), float(spec.alpha)
    fam = spec.family
    if fam is Family.SIN:
        return lambda x: math.sin(lam * x ** beta) / (lam * x ** (beta + alpha))
    if fam is Family.SINH:
        return lambda x: math.sinh(lam * x ** beta) / (lam * x ** (beta + alpha))
    if fam is Family.COS:
        return lambda x: math.cos(lam * x ** beta) / (lam * x ** (2 * beta + alpha))
    if fam is Family.COSH:
        return lambda x: math.cosh(lam * x ** beta) / (lam * x ** (2 * beta + alpha))
    return lambda x: math.exp(lam * x ** beta) / (lam * x ** (beta + alpha))


# -- exact rational partial sums ----------------------------------------------

def _rational(v) -> Fraction:
    if isinstance(v, bool) or not isinstance(v, (int, Fraction)):
        raise TypeError(f"exact rational required, got {type(v).__name__}")
    return Fraction(v)


def exact_coefficient(spec: IntegralSpec, n: int) -> Fraction:
    """c_n of the integrand series from factorials (no recurrence)."""
    lam = _rational(spec.lam)
    if spec.family is Family.SIN:
        return Fraction((-1) ** n) * lam ** (2 * n) / math.factorial(2 * n + 1)
    if spec.family is Family.SINH:
        return lam ** (2 * n) / math.factorial(2 * n + 1)
    if spec.family is Family.COS:
        return Fraction((-1) ** n) * lam ** (2 * n - 1) / math.factorial(2 * n)
    if spec.family is Family.COSH:
        return lam ** (2 * n - 1) / math.factorial(2 * n)
    return lam ** (n - 1) / math.factorial(n)


def exact_exponent(spec: IntegralSpec, n: int) -> Fraction:
    """Power of x in the n-th integrand term."""
    beta, alpha = _rational(spec.beta), _rational(spec.alpha)
    if spec.family in (Family.SIN, Family.SINH):
        return 2 * beta * n - alpha
    if spec.family in (Family.COS, Family.COSH):
        return 2 * beta * n - 2 * beta - alpha
    return beta * n - beta - alpha


def rational_partial_sum(obj: Union[PFQParams, IntegralSpec], x, N: int) -> Fraction:
    """Exact sum of the first ``N`` terms of a pFq series or integrand series.

    For an ``IntegralSpec`` every exponent in range must be an integer so
    that x**e stays rational.
    """
    if not 1 <= N <= 200:
        raise ValueError("N must be in [1, 200]")
    x = _rational(x)
    total = Fraction(0)
    if isinstance(obj, PFQParams):
        a = [_rational(v) for v in obj.numerator_params]
        b = [_rational(v) for v in obj.denominator_params]
        for n in range(N):
            num = Fraction(1)
            for ai in a:
                num *= _rising(ai, n)
            for bj in b:
                num /= _rising(bj, n)
            total += num * x ** n / math.factorial(n)
        return total
    for n in range(N):
        e = exact_exponent(obj, n)
        if e.denominator != 1:
            raise ValueError("non-integer exponent; the sum would not be rational")
        total += exact_coefficient(obj, n) * x ** int(e)
    return total


def _rising(v: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for k in range(n):
        out *= v + k
    return out


def exact_tail_sum(spec: IntegralSpec, n0: int, x: float, count: int = 50) -> float:
    """Direct compensated sum of integrated terms n0 .. n0+count-1 at float x."""
    terms = []
    for n in range(n0, n0 + count):
        e = exact_exponent(spec, n) + 1
        coef = exact_coefficient(spec, n) / e
        terms.append(float(coef) * x ** float(e))
    return math.fsum(terms)


# -- definite integrals -------------------------------------------------------

@dataclass
class ComparisonReport:
    formula_value: float
    oracle_value: float
    abs_gap: float
    rel_gap: float
    passed: bool
    precision_loss: bool
    tol_rel: float
    tol_abs: float
    formula: dict = field(default_factory=dict)
    oracle: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "formula_value": self.formula_value,
            "oracle_value": self.oracle_value,
            "abs_gap": self.abs_gap,
            "rel_gap": self.rel_gap,
            "pass": self.passed,
            "precision_loss": self.precision_loss,
            "tol_rel": self.tol_rel,
            "tol_abs": self.tol_abs,
            "formula": self.formula,
            "oracle": self.oracle,
        }


def compare_definite(spec: IntegralSpec, a, b, tol: float = 1e-9, tol_abs: float = 0.0) -> ComparisonReport:
    """F(b) - F(a) from the closed form against adaptive quadrature.

    ``precision_loss`` is set when the closed form's own error estimate is
    larger than the allowed gap, i.e. a pass would not be trustworthy.
    """
    a, b = float(a), float(b)
    if not 0 < a < b:
        raise ValueError("require 0 < a < b")
    fa = antiderivative(spec, a)
    fb = antiderivative(spec, b)
    formula_value = fb.value - fa.value
    formula_err = fa.abs_error_estimate + fb.abs_error_estimate + EPS * (abs(fa.value) + abs(fb.value))

    quad = adaptive_quadrature(integrand(spec), a, b, tol=1e-300, rel_tol=max(tol * 1e-2, QUAD_REL_FLOOR))
    gap = abs(formula_value - quad.value)
    allowed = max(tol_abs, tol * abs(quad.value))
    rel_gap = gap / abs(quad.value) if quad.value != 0 else math.inf
    converged = fa.converged and fb.converged and quad.converged
    return ComparisonReport(
        formula_value=formula_value,
        oracle_value=quad.value,
        abs_gap=gap,
        rel_gap=rel_gap,
        passed=converged and gap <= allowed,
        precision_loss=formula_err > allowed,
        tol_rel=tol,
        tol_abs=tol_abs,
        formula={
            "abs_error_estimate": formula_err,
            "digits_lost": max(fa.digits_lost, fb.digits_lost),
            "terms_used": max(fa.terms_used, fb.terms_used),
            "converged": fa.converged and fb.converged,
        },
        oracle=quad.as_dict(),
    )
