"""
Exact and float evaluation of the polynomial family
====================================================

The degree-n family member is a terminating hypergeometric sum, so at
any Gaussian-rational point it has an exact Gaussian-rational value.
The float path reports how many bits the alternating sum cancelled.
"""

from fractions import Fraction

from hyp3f1.arith import GaussianRational
from hyp3f1.hyper import (
    PolyParams,
    family_exact,
    family_float,
    family_spec,
    terminating_3f1_float_report,
)

# a few exact values along the imaginary segment, where the family
# oscillates
print("exact values at z = i/2, alpha = 1")
for n in range(6):
    value = family_exact(PolyParams(n, 1), GaussianRational(0, Fraction(1, 2)))
    print(f"  n={n}:  {value}")

# the same machinery accepts any Gaussian rational
z = GaussianRational.parse("2-1/3i")
print(f"\nexact value at z = {z}, n = 4, alpha = 3")
print(f"  {family_exact(PolyParams(4, 3), z)}")

# float evaluation is two-pass: a probe pass measures cancellation,
# the payoff pass reruns with that many extra bits
params = PolyParams(100, 1)
spec = family_spec(params, GaussianRational(3, 0))
value, report = terminating_3f1_float_report(spec, 128)
print("\nfloat evaluation at z = 3, n = 100, alpha = 1 (128-bit target)")
print(f"  value             {value.real}")
print(f"  largest term      {float(report.max_term_magnitude):.3e}")
print(f"  result magnitude  {float(report.result_magnitude):.3e}")
print(f"  cancelled bits    {report.cancellation_bits}")
print(f"  working bits      {report.working_bits}")

# family_float wraps the same thing when the report is not needed
quick = family_float(params, GaussianRational(3, 0), 128)
print(f"  family_float agrees: {quick.real == value.real}")
