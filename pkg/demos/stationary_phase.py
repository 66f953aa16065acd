"""
Splitting the oscillatory integral by phase
===========================================

Substituting t = cos(theta) turns the Chebyshev transform into the
mean of two integrals with phases n(-cos(theta)/y - theta) and
n(-cos(theta)/y + theta).  The second phase is monotone, so its
integral dies off; the first has stationary points that produce the
sqrt(n) envelope along the segment, and at y = 1 the two stationary
points coalesce into the n^(2/3) corner growth.
"""

from fractions import Fraction

import gmpy2

from hyp3f1.asym import (
    phase_data,
    stationary_phase_minus,
    stationary_phase_minus_endpoint,
)
from hyp3f1.quad import QuadratureConfig, phase_split_integrals

PREC = 256
CFG = QuadratureConfig(precision_bits=PREC)

# where the slow phase is stationary, and how curved it is there
print("stationary points of the slow phase")
for y in (Fraction(1, 4), Fraction(1, 2), Fraction(1)):
    data = phase_data(y, 128)
    pts = ", ".join(f"{float(t):.6f}" for t in data.stationary_points)
    if data.coalesced:
        print(f"  y={str(y):>3}: theta = {pts} (coalesced, third derivative "
              f"{float(data.third_derivative):+.0f})")
    else:
        curv = ", ".join(f"{float(c):+.4f}" for c in data.second_derivatives)
        print(f"  y={str(y):>3}: theta = {pts}  curvature = {curv}")

# the fast-phase half disappears at rate better than 1/n
print("\nfast-phase half at y = 1/2: n * |I+|")
for n in (50, 100, 200):
    split = phase_split_integrals(n, Fraction(1, 2), CFG)
    with gmpy2.context(precision=PREC):
        print(f"  n={n:>3}  {float(n * abs(split.plus)):.3e}")

# the slow-phase half against its stationary-phase approximation
print("\nslow-phase half vs approximation at y = 1/2 (error in envelopes)")
for n in (50, 100, 200):
    split = phase_split_integrals(n, Fraction(1, 2), CFG)
    approx = stationary_phase_minus(n, Fraction(1, 2), PREC)
    with gmpy2.context(precision=PREC):
        yv = gmpy2.mpfr(1) / 2
        env = 2 * yv * gmpy2.sqrt(
            2 * gmpy2.const_pi() * yv / (n * gmpy2.sqrt(1 - yv * yv)))
        diff = abs(gmpy2.mpc(split.minus.real - approx.real,
                             split.minus.imag - approx.imag))
        print(f"  n={n:>3}  {float(diff / env):.2e}")

# at the corner the contributions realign along the axes with period 4
print("\ncorner approximation at y = 1 walks the four axes")
for n in (8, 9, 10, 11):
    v = stationary_phase_minus_endpoint(n, 128)
    print(f"  n={n:>2}  re {float(v.real):+.6f}  im {float(v.imag):+.6f}")
