"""Closed-form primitives of sine, cosine and exponential integrals with
power-law denominators, expressed through generalized hypergeometric series."""

from .integrals import (
    Case,
    Decomposition,
    FormulaDoc,
    antiderivative,
    ci_antiderivative,
    cosh_antiderivative,
    decompose,
    ei_antiderivative,
    ei_beta1,
    emit_formula,
    primitive,
    si_antiderivative,
    sinh_antiderivative,
)
from .series import (
    AntiderivativeForm,
    DomainError,
    EvalResult,
    Family,
    IntegralSpec,
    IntegrandSeries,
    build_series,
    eval_form,
    extract_pfq,
    integrate_termwise,
)
from .special import PFQParams, ParameterError, PoleError, SeriesEvalReport, duplication_gap, gamma, pfq, pochhammer

__version__ = "0.1.0"
