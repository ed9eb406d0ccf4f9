"""Termwise integration of the integrand's Maclaurin series.

Every supported integrand has the shape ``sum_n c_n x**(step*n + offset)``.
Integrating term by term splits the result into three parts by the sign of
the pre-integration exponent ``e_n = step*n + offset``:

* a finite head of power terms ``c_n x**(e_n+1)/(e_n+1)`` for ``e_n < 0``,
  ``e_n != -1``,
* at most one logarithmic term ``c_n ln|x|`` when some ``e_n == -1``,
* the remaining tail, whose term ratio is a rational function of the index
  and therefore sums to a single ``pFq``.

Parameters given as ``int``, ``Fraction`` or decimal strings are kept exact,
so the head coefficients, log detection and hypergeometric parameters are
exact rationals. Plain floats take a tolerance-based path.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Union

from .special import DEFAULT_MAX_TERMS, DEFAULT_TOL, EPS, PFQParams, SeriesEvalReport, pfq

Real = Union[float, Fraction]

EXPONENT_TOL = 1e-12


class DomainError(ValueError):
    """Raised when a primitive is evaluated outside x > 0."""


class Family(str, enum.Enum):
    SIN = "sin"
    SINH = "sinh"
    COS = "cos"
    COSH = "cosh"
    EXP = "exp"


def as_number(v) -> Real:
    """Coerce a parameter to ``Fraction`` when it is exact, else ``float``.

    Strings are parsed as exact decimals ("2.7" -> 27/10).
    """
    if isinstance(v, bool):
        raise TypeError("boolean is not a number")
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a finite decimal: {v!r}") from exc
    v = float(v)
    if not math.isfinite(v):
        raise ValueError("parameters must be finite")
    return v


@dataclass(frozen=True)
class IntegralSpec:
    """One integral ``int g(x) dx`` of a supported family.

    ``sin``/``sinh``: g = sin(lam x^beta) / (lam x^(beta+alpha))
    ``cos``/``cosh``: g = cos(lam x^beta) / (lam x^(2 beta+alpha))
    ``exp``:          g = exp(lam x^beta) / (lam x^(beta+alpha))

    The 1/lam factor is part of every integrand.
    """

    family: Family
    lam: Real
    beta: Real
    alpha: Real

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        for name in ("lam", "beta", "alpha"):
            object.__setattr__(self, name, as_number(getattr(self, name)))
        if self.lam == 0:
            raise ValueError("lambda must be nonzero")
        if self.beta < 1:
            raise ValueError("beta must be >= 1")
        # alpha <= 1 (no head, or a shorter one) is accepted here; the
        # public constructors in ``integrals`` enforce alpha > 1.

    @property
    def exact(self) -> bool:
        return all(isinstance(v, Fraction) for v in (self.lam, self.beta, self.alpha))


@dataclass(frozen=True)
class IntegrandSeries:
    """Maclaurin expansion of the integrand: sum_n c_n x**(step*n + offset)."""

    spec: IntegralSpec
    step: Real
    offset: Real

    def exponent(self, n: int) -> Real:
        return self.step * n + self.offset

    def coefficients(self) -> Iterator[Real]:
        """Yield c_0, c_1, ... by the ratio recurrence (no large factorials)."""
        fam, lam = self.spec.family, self.spec.lam
        if fam in (Family.SIN, Family.SINH):
            c = lam ** 0
        else:
            c = 1 / lam
        sign = -1 if fam in (Family.SIN, Family.COS) else 1
        n = 0
        while True:
            yield c
            if fam in (Family.SIN, Family.SINH):
                c = c * sign * lam * lam / ((2 * n + 2) * (2 * n + 3))
            elif fam in (Family.COS, Family.COSH):
                c = c * sign * lam * lam / ((2 * n + 1) * (2 * n + 2))
            else:
                c = c * lam / (n + 1)
            n += 1

    def coefficient(self, n: int) -> Real:
        for k, c in enumerate(self.coefficients()):
            if k == n:
                return c
        raise AssertionError("unreachable")

    def terms(self, count: int) -> list[tuple[Real, Real]]:
        """First ``count`` (coefficient, exponent) pairs."""
        out = []
        for n, c in enumerate(self.coefficients()):
            if n >= count:
                break
            out.append((c, self.exponent(n)))
        return out


def build_series(spec: IntegralSpec) -> IntegrandSeries:
    b, a = spec.beta, spec.alpha
    if spec.family in (Family.SIN, Family.SINH):
        return IntegrandSeries(spec, 2 * b, -a)
    if spec.family in (Family.COS, Family.COSH):
        return IntegrandSeries(spec, 2 * b, -2 * b - a)
    return IntegrandSeries(spec, b, -b - a)


@dataclass(frozen=True)
class PowerTerm:
    coef: Real
    exponent: Real


@dataclass(frozen=True)
class TailDescriptor:
    """tail(x) = t0_coef * x**t0_exponent * pFq(pfq; arg_scale * x**arg_power)."""

    t0_coef: Real
    t0_exponent: Real
    pfq: PFQParams
    arg_scale: Real
    arg_power: Real
    start_index: int = 0


@dataclass(frozen=True)
class AntiderivativeForm:
    """Primitive with integration constant zero: head + log + tail."""

    power_terms: tuple[PowerTerm, ...]
    log_coef: Optional[Real]
    tail: TailDescriptor
    spec: Optional[IntegralSpec] = field(default=None, compare=False)


def _is_minus_one(e: Real) -> bool:
    if isinstance(e, Fraction):
        return e == -1
    return abs(e + 1) <= EXPONENT_TOL * (1 + abs(e))


def _is_negative(e: Real) -> bool:
    if isinstance(e, Fraction):
        return e < 0
    return e < -EXPONENT_TOL * (1 + abs(e))


def extract_pfq(series: IntegrandSeries, n0: int) -> TailDescriptor:
    """Package the terms n >= n0 of the integrated series as one pFq.

    With e0 = exponent(n0) + 1 the term ratio of c_n x**(e_n+1)/(e_n+1) is a
    rational function of k = n - n0, which fixes the parameters below.
    """
    e = series.exponent(n0)
    if not (e > -1) or _is_minus_one(e):
        raise ValueError(f"exponent({n0}) = {e} is not above -1")
    spec = series.spec
    lam, step = spec.lam, series.step
    e0 = e + 1
    t0 = series.coefficient(n0) / e0
    shift = e0 / step
    fam = spec.family
    if fam in (Family.SIN, Family.SINH):
        params = PFQParams((1, shift), (n0 + 1, n0 + Fraction(3, 2), 1 + shift))
        scale = lam * lam / 4
    elif fam in (Family.COS, Family.COSH):
        params = PFQParams((1, shift), (n0 + Fraction(1, 2), n0 + 1, 1 + shift))
        scale = lam * lam / 4
    else:
        params = PFQParams((1, shift), (n0 + 1, 1 + shift))
        scale = lam
    if fam in (Family.SIN, Family.COS):
        scale = -scale
    conv = Fraction if spec.exact else float
    params = PFQParams(
        tuple(conv(v) for v in params.numerator_params),
        tuple(conv(v) for v in params.denominator_params),
    )
    scale = conv(scale)
    return TailDescriptor(t0, e0, params, scale, step, n0)


def integrate_termwise(series: IntegrandSeries) -> AntiderivativeForm:
    head: list[PowerTerm] = []
    log_coef = None
    for n, c in enumerate(series.coefficients()):
        e = series.exponent(n)
        if _is_minus_one(e):
            log_coef = c
        elif _is_negative(e):
            head.append(PowerTerm(c / (e + 1), e + 1))
        else:
            return AntiderivativeForm(tuple(head), log_coef, extract_pfq(series, n), series.spec)
    raise AssertionError("unreachable: exponents increase without bound")


@dataclass(frozen=True)
class EvalResult:
    value: float
    abs_error_estimate: float
    terms_used: int
    digits_lost: float
    converged: bool
    tail: Optional[SeriesEvalReport] = None

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "abs_error_estimate": self.abs_error_estimate,
            "terms_used": self.terms_used,
            "digits_lost": self.digits_lost,
            "converged": self.converged,
        }


def _xpow(x: float, e: float) -> float:
    try:
        return x ** e
    except OverflowError:
        return math.inf


def eval_tail(tail: TailDescriptor, x: float, tol: float = DEFAULT_TOL,
              max_terms: int = DEFAULT_MAX_TERMS) -> tuple[float, SeriesEvalReport, float]:
    """Return (tail value, pFq report, |prefactor|)."""
    pre = float(tail.t0_coef) * _xpow(x, float(tail.t0_exponent))
    arg = float(tail.arg_scale) * _xpow(x, float(tail.arg_power))
    rep = pfq(tail.pfq, arg, tol=tol, max_terms=max_terms)
    return pre * rep.value, rep, abs(pre)


def eval_form(form: AntiderivativeForm, x: float, tol: float = DEFAULT_TOL,
              max_terms: int = DEFAULT_MAX_TERMS) -> EvalResult:
    """Evaluate the primitive at ``x > 0``."""
    x = float(x)
    if not x > 0:
        raise DomainError("primitives are evaluated on x > 0 only")
    parts = [float(t.coef) * _xpow(x, float(t.exponent)) for t in form.power_terms]
    head_abs = sum(abs(v) for v in parts)
    if form.log_coef is not None:
        parts.append(float(form.log_coef) * math.log(x))
    tail_value, rep, pre = eval_tail(form.tail, x, tol, max_terms)
    parts.append(tail_value)

    finite = all(math.isfinite(v) for v in parts)
    value = math.fsum(parts) if finite else sum(parts)
    abs_parts = sum(abs(v) for v in parts)
    err = (
        pre * rep.abs_error_estimate
        + 2 * EPS * head_abs
        + EPS * abs_parts
    )
    return EvalResult(
        value=value,
        abs_error_estimate=err,
        terms_used=rep.terms_used,
        digits_lost=max(rep.digits_lost, math.log10(max(1.0, abs_parts / max(abs(value), 1e-300)))),
        converged=rep.converged and finite and math.isfinite(err),
        tail=rep,
    )
