"""
Convergence tables for the four asymptotic regimes
==================================================

Each table compares the exact family value against the leading-order
approximation for that regime.  The ratio column should drift toward
1; the segment table also shows the oscillation phase that makes some
rows unusable for ratios (the approximation passes through zero).
"""

from fractions import Fraction

import gmpy2

from hyp3f1.arith import GaussianRational
from hyp3f1.asym import (
    endpoint_approx,
    exterior_approx,
    interior_approx,
    oscillation_phase,
    segment_approx,
)
from hyp3f1.hyper import PolyParams, family_exact, segment_target

PREC = 192


def ratio(exact, approx):
    with gmpy2.context(precision=PREC):
        return float((exact / approx).real)


# exterior: geometric growth, ratio closes fast
print("exterior, z = 3, alpha = 1")
z = GaussianRational(3, 0)
for n in (25, 50, 100, 200):
    exact = family_exact(PolyParams(n, 1), z).to_bigcomplex(PREC)
    approx = exterior_approx(PolyParams(n, 1), z, PREC).value
    print(f"  n={n:>4}  ratio={ratio(exact, approx):.6f}")

# interior: algebraic decay; alpha = 1 at z = 1 makes the
# approximation exactly -1/n
print("\ninterior, z = 1, alpha = 2")
z = GaussianRational(1, 0)
for n in (100, 200, 400, 800):
    exact = family_exact(PolyParams(n, 2), z).to_bigcomplex(PREC)
    approx = interior_approx(PolyParams(n, 2), z, PREC).value
    print(f"  n={n:>4}  ratio={ratio(exact, approx):.6f}")

# segment: oscillatory envelope sqrt(n); ratios only mean something
# when the cosine/sine factor is not near zero
print("\nsegment, y = 1/2 (osc = the phase factor in the approximation)")
y = Fraction(1, 2)
for n in (100, 200, 400, 800):
    exact = segment_target(n, y, PREC)
    approx = segment_approx(n, y, PREC).value
    phase = oscillation_phase(n, y, PREC)
    with gmpy2.context(precision=PREC):
        osc = gmpy2.cos(phase) if n % 2 == 0 else gmpy2.sin(phase)
        r = float(exact / approx)
    print(f"  n={n:>4}  ratio={r:.6f}  osc={float(osc):+.3f}")

# endpoint: n^(2/3) growth with a period-4 sign pattern
print("\nendpoint, y = 1")
for n in (250, 500, 1000):
    exact = segment_target(n, Fraction(1), PREC)
    approx = endpoint_approx(n, PREC).value
    with gmpy2.context(precision=PREC):
        r = float(exact / approx)
    print(f"  n={n:>4}  ratio={r:.6f}")
