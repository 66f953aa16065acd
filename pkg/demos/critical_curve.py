"""
The critical curve that separates growth from decay
===================================================

The growth factor phi(z) built from the inverse Joukowsky map has
modulus 1 on a closed curve.  Outside it the family grows like
|phi|^n, inside it decays algebraically, and the imaginary segment
between -i and i is where |phi| = 1 exactly.
"""

from fractions import Fraction

from hyp3f1.arith import BigComplex, GaussianRational
from hyp3f1.geometry import (
    classify,
    growth_factor,
    joukowsky_inverse,
    real_axis_crossing,
    trace_curve,
)

# the inverse map picks the branch with |w| > 1; on the segment it has
# a closed form
w = joukowsky_inverse(GaussianRational(0, Fraction(1, 2)), 128)
print(f"w(i/2) = {w.real} + {w.imag}i   |w| = {abs(w)}")

# classification of a spread of points
print("\nclassification (1e-12 band):")
for text in ("3", "1", "1/2+1/2i", "0+1/2i", "0+1i", "-2+1i", "0+3i"):
    z = GaussianRational.parse(text)
    regime = classify(z, 1e-12, 128)
    mod = "" if regime.abs_phi is None else f"   |phi| = {float(regime.abs_phi):.6f}"
    print(f"  z = {text:>9}:  {regime.tag.value}{mod}")

# the curve crosses the positive real axis between 2 and 3
crossing = real_axis_crossing(precision_bits=192)
print(f"\npositive real axis crossing: {crossing}")
print(f"|phi| there: {abs(growth_factor(BigComplex(crossing, 0, 192), 192))}")

# trace the whole curve: one point per ray from the origin, plus the
# segment
trace = trace_curve(angle_count=16, tol=1e-12, precision_bits=128)
print(f"\ntraced {len(trace.points)} points, worst residual "
      f"{float(max(trace.residuals)):.2e}")
print("first few lobe points (theta, re, im):")
for theta, p in list(zip(trace.angles, trace.points))[:4]:
    print(f"  {float(theta):+.4f}  {float(p.real):.6f}  {float(p.imag):+.6f}")
