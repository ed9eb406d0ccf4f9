"""Public entry points: one primitive per integrand family plus formula output.

All primitives use the integrand with the 1/lam factor, e.g.

    si_antiderivative(lam, beta, alpha, x)  ~  int sin(lam t^beta) / (lam t^(beta+alpha)) dt
    ci_antiderivative(lam, beta, alpha, x)  ~  int cos(lam t^beta) / (lam t^(2beta+alpha)) dt
    ei_antiderivative(lam, beta, alpha, x)  ~  int exp(lam t^beta) / (lam t^(beta+alpha)) dt

and return the value of the primitive whose integration constant is zero.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .series import (
    AntiderivativeForm,
    EvalResult,
    Family,
    IntegralSpec,
    PowerTerm,
    Real,
    TailDescriptor,
    as_number,
    build_series,
    eval_form,
    integrate_termwise,
)
from .special import DEFAULT_TOL, PFQParams

SNAP_TOL = 1e-12


class Case(str, enum.Enum):
    EPS_ZERO = "EpsZero"
    EPS_ONE = "EpsOne"
    GENERAL = "General"


@dataclass(frozen=True)
class Decomposition:
    m: int
    epsilon: Real
    case: Case

    def as_dict(self) -> dict:
        return {"m": self.m, "epsilon": encode_number(self.epsilon), "case": self.case.value}


def _step(family, beta):
    return beta if Family(family) is Family.EXP else 2 * beta


def _integral(v) -> Optional[int]:
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else None
    r = round(v)
    return int(r) if abs(v - r) <= SNAP_TOL * max(1.0, abs(v)) else None


def decompose(family, alpha, beta) -> Decomposition:
    """Write alpha = m*d + eps with d = 2*beta (trig/hyperbolic) or beta (exp).

    eps is taken in [0, d); the exact cases eps = 0 and eps = 1 are snapped.
    """
    alpha, beta = as_number(alpha), as_number(beta)
    if not alpha > 1 or beta < 1:
        raise ValueError("decompose requires alpha > 1 and beta >= 1")
    d = _step(family, beta)
    m = _integral(alpha / d)
    if m is not None:
        return Decomposition(m, alpha - alpha, Case.EPS_ZERO)
    m = _integral((alpha - 1) / d)
    if m is not None and m >= 0:
        return Decomposition(m, alpha ** 0, Case.EPS_ONE)
    m = math.floor(alpha / d)
    return Decomposition(m, alpha - m * d, Case.GENERAL)


def _cache_key(spec: IntegralSpec):
    return (spec.family,) + tuple((type(v).__name__, v) for v in (spec.lam, spec.beta, spec.alpha))


@lru_cache(maxsize=256)
def _primitive(key) -> AntiderivativeForm:
    family, (_, lam), (_, beta), (_, alpha) = key
    return integrate_termwise(build_series(IntegralSpec(family, lam, beta, alpha)))


def primitive(family, lam, beta, alpha) -> AntiderivativeForm:
    """Closed form of the primitive, built once per parameter set."""
    spec = IntegralSpec(family, lam, beta, alpha)
    return _primitive(_cache_key(spec))


def _evaluate(family, lam, beta, alpha, x, tol) -> EvalResult:
    spec = IntegralSpec(family, lam, beta, alpha)
    if not spec.alpha > 1:
        raise ValueError("alpha must be > 1")
    return eval_form(_primitive(_cache_key(spec)), x, tol)


def si_antiderivative(lam, beta, alpha, x, tol=DEFAULT_TOL) -> EvalResult:
    return _evaluate(Family.SIN, lam, beta, alpha, x, tol)


def sinh_antiderivative(lam, beta, alpha, x, tol=DEFAULT_TOL) -> EvalResult:
    return _evaluate(Family.SINH, lam, beta, alpha, x, tol)


def ci_antiderivative(lam, beta, alpha, x, tol=DEFAULT_TOL) -> EvalResult:
    return _evaluate(Family.COS, lam, beta, alpha, x, tol)


def cosh_antiderivative(lam, beta, alpha, x, tol=DEFAULT_TOL) -> EvalResult:
    return _evaluate(Family.COSH, lam, beta, alpha, x, tol)


def ei_antiderivative(lam, beta, alpha, x, tol=DEFAULT_TOL) -> EvalResult:
    return _evaluate(Family.EXP, lam, beta, alpha, x, tol)


def ei_beta1(lam, alpha, x, tol=DEFAULT_TOL) -> EvalResult:
    """Exponential family with beta = 1; integer alpha produces a log term."""
    return ei_antiderivative(lam, 1, alpha, x, tol)


ANTIDERIVATIVES = {
    Family.SIN: si_antiderivative,
    Family.SINH: sinh_antiderivative,
    Family.COS: ci_antiderivative,
    Family.COSH: cosh_antiderivative,
    Family.EXP: ei_antiderivative,
}


def antiderivative(spec: IntegralSpec, x, tol=DEFAULT_TOL) -> EvalResult:
    return ANTIDERIVATIVES[spec.family](spec.lam, spec.beta, spec.alpha, x, tol)


# -- rendering ---------------------------------------------------------------

def encode_number(v):
    """Exact rationals become strings ("-27/10"), floats stay JSON numbers."""
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, int):
        return str(v)
    return float(v)


def decode_number(v) -> Real:
    if isinstance(v, str):
        return Fraction(v)
    return float(v)


def _decimal_str(v: Fraction) -> str:
    with localcontext() as ctx:
        ctx.prec = 60
        s = format(Decimal(v.numerator) / Decimal(v.denominator), "f")
    return s.rstrip("0").rstrip(".") if "." in s else s


def _den_is_power_of_two(q: int) -> bool:
    return q & (q - 1) == 0


def _terminates(q: int) -> bool:
    for f in (2, 5):
        while q % f == 0:
            q //= f
    return q == 1


def fmt_number(v, decimal: bool = False) -> str:
    """Render a parameter: integers plainly, terminating values as decimals
    (only when the denominator has a factor 5 unless ``decimal``), else p/q."""
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return str(v.numerator)
        pow2 = _den_is_power_of_two(v.denominator)
        if _terminates(v.denominator) and (decimal or not pow2):
            return _decimal_str(v)
        return f"{v.numerator}/{v.denominator}"
    v = float(v)
    if v.is_integer():
        return str(int(v))
    return repr(v)


def _power(e) -> str:
    if e == 1:
        return "x"
    s = fmt_number(e, decimal=True)
    return f"x^({s})" if "/" in s else f"x^{s}"


def _scaled(coef, symbol: str) -> tuple[bool, str]:
    """Split coef*symbol into (negative, body) using x/D where D is tidy."""
    neg = coef < 0
    mag = abs(coef)
    if mag == 1:
        return neg, symbol
    if isinstance(mag, Fraction):
        if mag.denominator == 1:
            return neg, f"{mag.numerator}*{symbol}"
        d = fmt_number(1 / mag, decimal=True)
        if "/" not in d:
            return neg, f"{symbol}/{d}"
        return neg, f"({mag.numerator}/{mag.denominator})*{symbol}"
    return neg, f"{fmt_number(mag)}*{symbol}"


def _join(pieces: list[tuple[bool, str]]) -> str:
    out = ""
    for i, (neg, body) in enumerate(pieces):
        if i == 0:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out


def render_tail(tail: TailDescriptor) -> tuple[bool, str]:
    neg_arg, arg = _scaled(tail.arg_scale, _power(tail.arg_power))
    a = ", ".join(fmt_number(v) for v in tail.pfq.numerator_params)
    b = ", ".join(fmt_number(v) for v in tail.pfq.denominator_params)
    hyp = f"{tail.pfq.p}F{tail.pfq.q}({a}; {b}; {'-' if neg_arg else ''}{arg})"
    neg, pre = _scaled(tail.t0_coef, _power(tail.t0_exponent))
    if "/" in pre or "*" in pre:
        pre = f"({pre})"
    return neg, f"{pre}*{hyp}"


def render_text(form: AntiderivativeForm) -> str:
    pieces = [_scaled(t.coef, _power(t.exponent)) for t in form.power_terms]
    if form.log_coef is not None:
        pieces.append(_scaled(form.log_coef, "ln|x|"))
    pieces.append(render_tail(form.tail))
    return f"F(x) = {_join(pieces)} + C"


def form_to_structured(spec: IntegralSpec, form: AntiderivativeForm) -> dict:
    head = []
    for t in form.power_terms:
        item = {"coef_float": float(t.coef), "exponent": encode_number(t.exponent)}
        if isinstance(t.coef, Fraction):
            item["coef_num"] = t.coef.numerator
            item["coef_den"] = t.coef.denominator
        head.append(item)
    tail = form.tail
    doc = {
        "family": spec.family.value,
        "lambda": encode_number(spec.lam),
        "beta": encode_number(spec.beta),
        "alpha": encode_number(spec.alpha),
        "exact": spec.exact,
        "head": head,
        "log_coef": None if form.log_coef is None else encode_number(form.log_coef),
        "tail": {
            "t0": encode_number(tail.t0_coef),
            "exponent": encode_number(tail.t0_exponent),
            "p": tail.pfq.p,
            "q": tail.pfq.q,
            "a": [encode_number(v) for v in tail.pfq.numerator_params],
            "b": [encode_number(v) for v in tail.pfq.denominator_params],
            "arg_scale": encode_number(tail.arg_scale),
            "arg_power": encode_number(tail.arg_power),
            "start_index": tail.start_index,
        },
    }
    if spec.alpha > 1:
        doc["decomposition"] = decompose(spec.family, spec.alpha, spec.beta).as_dict()
    return doc


def form_from_structured(doc: dict) -> tuple[IntegralSpec, AntiderivativeForm]:
    spec = IntegralSpec(
        doc["family"],
        decode_number(doc["lambda"]),
        decode_number(doc["beta"]),
        decode_number(doc["alpha"]),
    )
    head = []
    for item in doc["head"]:
        if "coef_num" in item:
            coef = Fraction(item["coef_num"], item.get("coef_den", 1))
        else:
            coef = float(item["coef_float"])
        head.append(PowerTerm(coef, decode_number(item["exponent"])))
    t = doc["tail"]
    tail = TailDescriptor(
        decode_number(t["t0"]),
        decode_number(t["exponent"]),
        PFQParams(tuple(decode_number(v) for v in t["a"]), tuple(decode_number(v) for v in t["b"])),
        decode_number(t["arg_scale"]),
        decode_number(t["arg_power"]),
        t.get("start_index", 0),
    )
    log_coef = None if doc.get("log_coef") is None else decode_number(doc["log_coef"])
    return spec, AntiderivativeForm(tuple(head), log_coef, tail, spec)


@dataclass(frozen=True)
class FormulaDoc:
    text: str
    structured: dict
    format: str = "text"

    def dumps(self) -> str:
        if self.format == "json":
            return json.dumps(self.structured, sort_keys=True)
        return self.text

    @classmethod
    def loads(cls, payload: str) -> "FormulaDoc":
        doc = json.loads(payload)
        _, form = form_from_structured(doc)
        return cls(render_text(form), doc, "json")


def emit_formula(spec: IntegralSpec, format: str = "text") -> FormulaDoc:
    if format not in ("text", "json"):
        raise ValueError("format must be 'text' or 'json'")
    form = _primitive(_cache_key(spec))
    return FormulaDoc(render_text(form), form_to_structured(spec, form), format)
