"""
Published forms that do not differentiate back
==============================================

Some printed closed forms for these integrals carry sign or constant
mistakes. Differentiating them numerically makes that plain, while the
derived forms reproduce the integrand.
"""

from nonelem.integrals import antiderivative, emit_formula
from nonelem.selftest import ERRATA, derivative_gap

for err in ERRATA:
    print(err.name)
    print("  published:", err.published)
    print("  derived:  ", emit_formula(err.spec).text)
    F = lambda x, s=err.spec: antiderivative(s, x).value
    for x in (0.5, 1.0, 2.0):
        print(f"    x={x}: derived gap {derivative_gap(err.spec, F, x):.1e}, "
              f"published gap {derivative_gap(err.spec, err.published_value, x):.1e}")
