"""Gamma, Pochhammer symbols and generalized hypergeometric series.

The hypergeometric evaluator sums

    pFq(a; b; x) = sum_n (a_1)_n ... (a_p)_n / ((b_1)_n ... (b_q)_n) * x**n / n!

by its term recurrence and reports how much precision was lost to
alternating-sign cancellation, which is the main failure mode for large
negative arguments.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

Real = Union[int, float, Fraction]

EPS = sys.float_info.epsilon
TINY = sys.float_info.min

DEFAULT_TOL = 1e-15
DEFAULT_MAX_TERMS = 10000


class PoleError(ValueError):
    """Raised when the gamma function is evaluated at a pole."""


class ParameterError(ValueError):
    """Raised for invalid hypergeometric parameters."""


def _is_nonpositive_integer(v: Real) -> bool:
    return v <= 0 and v == int(v)


def gamma(z: Real) -> float:
    """Gamma function on the real line, excluding the poles 0, -1, -2, ..."""
    if _is_nonpositive_integer(z):
        raise PoleError(f"gamma has a pole at {z}")
    return math.gamma(float(z))


def pochhammer(v: Real, n: int) -> Real:
    """Rising factorial (v)_n = v (v+1) ... (v+n-1), with (v)_0 = 1.

    Computed as an iterated product, so exact for ``Fraction``/``int`` input.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    result: Real = 1
    for k in range(n):
        result = result * (v + k)
    return result


def duplication_gap(z: Real) -> float:
    """Relative residual of Legendre's duplication formula at ``z``.

    Returns |G(2z) - 2**(2z-1) G(z) G(z+1/2) / sqrt(pi)| / G(2z).
    """
    if z <= 0:
        raise ValueError("z must be positive")
    z = float(z)
    lhs = gamma(2 * z)
    rhs = 2.0 ** (2 * z - 1) * gamma(z) * gamma(z + 0.5) / math.sqrt(math.pi)
    return abs(lhs - rhs) / lhs


@dataclass(frozen=True)
class PFQParams:
    """Numerator and denominator parameter lists of a pFq series."""

    numerator_params: tuple[Real, ...]
    denominator_params: tuple[Real, ...]

    def __post_init__(self):
        object.__setattr__(self, "numerator_params", tuple(self.numerator_params))
        object.__setattr__(self, "denominator_params", tuple(self.denominator_params))
        for b in self.denominator_params:
            if _is_nonpositive_integer(b):
                raise ParameterError(f"denominator parameter {b} is a nonpositive integer")
        if self.p > self.q:
            raise ParameterError("only p <= q (entire) series are supported")

    @property
    def p(self) -> int:
        return len(self.numerator_params)

    @property
    def q(self) -> int:
        return len(self.denominator_params)

    @classmethod
    def of(cls, a: Sequence[Real], b: Sequence[Real]) -> "PFQParams":
        return cls(tuple(a), tuple(b))


@dataclass(frozen=True)
class SeriesEvalReport:
    value: float
    terms_used: int
    max_abs_partial_sum: float
    digits_lost: float
    converged: bool
    abs_error_estimate: float
    abs_term_sum: float = 0.0


def cancellation_digits(abs_sum: float, total: float) -> float:
    """log10 of the cancellation condition number sum|t| / |sum t|, floored at 0."""
    return math.log10(max(1.0, abs_sum / max(abs(total), TINY)))


def pfq(
    params: PFQParams,
    x: float,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> SeriesEvalReport:
    """Sum a generalized hypergeometric series with p <= q.

    Summation stops once three consecutive terms are each no larger than the
    previous one and below ``tol`` relative to the running sum. If
    ``max_terms`` is reached first, or a term overflows, the report has
    ``converged=False``; after an overflow the value is +/-inf.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = [float(v) for v in params.numerator_params]
    b = [float(v) for v in params.denominator_params]
    x = float(x)
    width = len(a) + len(b) + 2

    terms = [1.0]
    t = 1.0
    s = 1.0
    abs_sum = 1.0
    max_partial = 1.0
    rounding = EPS
    quiet = 0
    converged = False
    n = 0
    while n + 1 < max_terms:
        ratio = x / (n + 1)
        for ai in a:
            ratio *= ai + n
        for bj in b:
            ratio /= bj + n
        t_next = t * ratio
        if not math.isfinite(t_next) or not math.isfinite(s + t_next):
            break  # overflow: report as not converged
        n += 1
        terms.append(t_next)
        s += t_next
        abs_t = abs(t_next)
        abs_sum += abs_t
        max_partial = max(max_partial, abs(s))
        rounding += EPS * (1 + n * width) * abs_t
        if abs_t <= tol * abs(s) and abs_t <= abs(t):
            quiet += 1
        else:
            quiet = 0
        t = t_next
        if quiet >= 3:
            converged = True
            break

    value = math.fsum(terms)
    err = abs(t) + rounding
    if not converged and n + 1 < max_terms:
        value = math.copysign(math.inf, s if s else t)
        err = math.inf
    return SeriesEvalReport(
        value=value,
        terms_used=len(terms),
        max_abs_partial_sum=max_partial,
        digits_lost=cancellation_digits(abs_sum, value),
        converged=converged,
        abs_error_estimate=err,
        abs_term_sum=abs_sum,
    )
