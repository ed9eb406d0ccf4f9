"""
Hypergeometric series and gamma
===============================

The closed forms all end in a single pFq, so start with the evaluator.
"""

import math
from fractions import Fraction

from nonelem import PFQParams, duplication_gap, gamma, pfq, pochhammer
from nonelem.oracle import rational_partial_sum

# rising factorials stay exact for Fraction input
print(pochhammer(Fraction(1, 2), 3))  # 15/8
print(gamma(3.5), 0.5 * 1.5 * 2.5 * math.sqrt(math.pi))

# 0F0(;;x) is exp(x)
print(pfq(PFQParams((), ()), 1.0).value, math.e)

# 2F2(1, 1/2; 3, 3/2; -1), against an exact rational partial sum
params = PFQParams((1, Fraction(1, 2)), (3, Fraction(3, 2)))
rep = pfq(params, -1.0)
exact = rational_partial_sum(params, -1, 40)
print(rep.value, float(exact), rep.terms_used, "terms")

# large negative arguments cancel: the report says how badly
for x in (-5.0, -20.0, -30.0):
    rep = pfq(PFQParams((), ()), x)
    print(f"x={x:6}: value {rep.value:.6e} vs {math.exp(x):.6e}, "
          f"digits lost {rep.digits_lost:.1f}, est. error {rep.abs_error_estimate:.1e}")

# Legendre duplication holds to rounding
print(max(duplication_gap(k / 2) for k in range(1, 21)))
