"""
Integral identities checked to dozens of digits
===============================================

Two identities tie the exact sums to oscillatory integrals:

* the boundary sum S(n, y) equals -(i n / y) times the finite Fourier
  transform of the degree-n Chebyshev polynomial, and
* the weighted Fourier transform of a Jacobi polynomial has a closed
  form built from two terminating hypergeometric sums.

Both residuals land at the quadrature's certified precision, far
below anything a plotting check could see.
"""

from fractions import Fraction

import gmpy2

from hyp3f1.arith import GaussianRational
from hyp3f1.hyper import conjugate_pair_sum
from hyp3f1.quad import (
    QuadratureConfig,
    chebyshev_fourier,
    jacobi_fourier,
    jacobi_fourier_closed_form,
)

PREC = 256
CFG = QuadratureConfig(precision_bits=PREC)

print("boundary sum vs Chebyshev transform, residual |S + (in/y) I|")
for n, y in ((5, Fraction(1, 2)), (20, Fraction(1, 4)), (40, Fraction(3, 4)),
             (80, Fraction(1))):
    s = conjugate_pair_sum(n, y, PREC)
    integral = chebyshev_fourier(n, y, CFG)
    factor = GaussianRational(0, Fraction(n) / y)
    with gmpy2.context(precision=PREC):
        residual = abs(s + integral.value * factor)
    print(f"  n={n:>3} y={str(y):>4}  residual={float(residual):.2e}  "
          f"panels={integral.panels}")

print("\nJacobi transform: quadrature vs closed form")
cases = ((3, Fraction(0), Fraction(0), Fraction(3)),
         (6, Fraction(1, 2), Fraction(-1, 2), Fraction(10)),
         (9, Fraction(1), Fraction(2), Fraction(7, 2)))
for n, alpha, beta, lam in cases:
    direct = jacobi_fourier(n, alpha, beta, lam, CFG)
    closed = jacobi_fourier_closed_form(n, alpha, beta, lam, PREC)
    with gmpy2.context(precision=PREC):
        diff = abs(closed - direct.value)
    print(f"  n={n} a={str(alpha):>4} b={str(beta):>4} lam={str(lam):>3}  "
          f"diff={float(diff):.2e}")

print("\nclosed-form value for the first case, 40 digits")
value = jacobi_fourier_closed_form(3, Fraction(0), Fraction(0), Fraction(3), PREC)
print(f"  re {value.real}")
print(f"  im {value.imag}")
