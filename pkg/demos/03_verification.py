"""
Checking a closed form
======================

Two independent arbiters: differentiate the primitive numerically and
compare with the integrand, and compare F(b) - F(a) with quadrature.
"""

import math

from nonelem import IntegralSpec
from nonelem.integrals import antiderivative
from nonelem.oracle import adaptive_quadrature, compare_definite, integrand, richardson_derivative

spec = IntegralSpec("exp", -1, 2, 2)
F = lambda x: antiderivative(spec, x).value
g = integrand(spec)

for x in (0.5, 1.0, 2.0):
    d = richardson_derivative(F, x)
    print(f"x={x}: F'(x) = {d:.15f}  g(x) = {g(x):.15f}")
print(-math.exp(-1))

# plain quadrature of cos(x)/x^5 on [1, 2]
q = adaptive_quadrature(lambda t: math.cos(t) / t ** 5, 1, 2)
print(q)

rep = compare_definite(IntegralSpec("cos", 1, 1, 3), 1, 2, tol=1e-9)
print(rep.formula_value, rep.oracle_value, rep.rel_gap, rep.passed)

# Far from the origin the series cancels heavily. The comparison must not
# report a silent pass.
spec = IntegralSpec("sin", 1, 1, 4)
print(antiderivative(spec, 40.0).digits_lost)
rep = compare_definite(spec, 30, 40)
print("pass:", rep.passed, "precision loss:", rep.precision_loss, "rel gap:", rep.rel_gap)
