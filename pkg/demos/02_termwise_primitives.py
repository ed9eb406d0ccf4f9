"""
Primitives by termwise integration
==================================

Each integrand is a power series with a few negative powers up front.
Those integrate to explicit power terms (or a log when the power is -1),
and everything after packages into one hypergeometric function.
"""

from nonelem import IntegralSpec, build_series, emit_formula, integrate_termwise, primitive
from nonelem.integrals import ci_antiderivative, decompose, ei_antiderivative

# cos(x) / x^5 (the 1/lam factor is part of every integrand; lam = 1 here)
spec = IntegralSpec("cos", 1, 1, 3)
series = build_series(spec)
for c, e in series.terms(4):
    print(f"  {c} * x^{e}")

form = integrate_termwise(series)
print(form.power_terms)
print("log coefficient:", form.log_coef)
print(emit_formula(spec).text)

# the same primitive at a few points
for x in (0.5, 1.0, 2.0):
    print(x, ci_antiderivative(1, 1, 3, x).value)

# exact decimal inputs give exact rational coefficients
print(emit_formula(IntegralSpec("exp", -1, 1, "2.7")).text)
print(emit_formula(IntegralSpec("exp", -1, 2, 2)).text)
print(emit_formula(IntegralSpec("sin", 1, 2, "1.5")).text)

# the (m, eps) split of alpha; eps is always in [0, d)
print(decompose("exp", 2, 2))
print(decompose("exp", "2.7", 1))
print(decompose("cos", 3, 1))

# beta = 1 with integer alpha always carries a log term
print(primitive("exp", 1, 1, 2).log_coef)
print(ei_antiderivative(1, 1, 2, 1.5))

# JSON for machines
print(emit_formula(spec, "json").dumps())
