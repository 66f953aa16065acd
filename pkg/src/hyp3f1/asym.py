"""Leading-order large-n approximations in each regime.

Outside the critical curve the family grows like phi(z)^n with an
algebraic prefactor; inside it decays algebraically; on the open
segment z = iy the real target quantity oscillates with an n^(1/2)
envelope; at the corner z = i the two stationary points of the phase
coalesce and the envelope steepens to n^(2/3).  The four formulas:

  exterior:  F_n(z) ~ (-1)^n / Gamma(alpha) * n^(alpha - 1/2)
             * sqrt(pi/2) * ((1+s)/z)^(alpha-1) * (s/z)^(-1/2) * phi^n,
             s = w - z with the same branch as phi

  interior:  F_n(z) ~ (2/n)^alpha * Gamma(alpha + 1/2)/sqrt(pi)
             * (-1/z)^alpha

  segment:   target(n, y) ~ -sqrt(n pi y / (2 sqrt(1 - y^2)))
             * cos(A) for even n, sin(A) for odd n, where
             A = n (sqrt(1 - y^2)/y + asin y) - pi/4

  endpoint:  target(n, 1) ~ +-6^(1/3) Gamma(1/3) / (4 sqrt(3))
             * n^(2/3) with a sign of period four in n

The segment and endpoint formulas come from a stationary-phase
analysis of the half-phase integral with phase
phi_minus(theta) = -cos(theta)/y - theta, whose stationary points sit
at sin(theta) = y; the module exposes the phases, the stationary-point
data, and the corresponding approximations to that integral so the
chain from integral to target quantity can be checked link by link.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Union

import gmpy2
from gmpy2 import mpc, mpfr, mpq

from .arith import (
    GUARD_BITS,
    BigComplex,
    GaussianRational,
    gamma_one_third,
    gamma_pos_int,
    gamma_half_shift,
    pi_value,
    round_real,
)
from .geometry import Regime, RegimeTag, classify, growth_factor, joukowsky_inverse
from .hyper import PolyParams

# fixed segment coordinate in the corner regime; the target lives at
# z = iy with y = 1 and the constant keeps the 1/y factor visible
_ENDPOINT_Y = 1


class RegimeError(ValueError):
    """The point is not in the regime the approximation assumes."""

    def __init__(self, expected: RegimeTag, found: Regime):
        self.expected = expected
        self.found = found
        super().__init__(
            f"expected a point in regime {expected.value}, "
            f"classified as {found.tag.value}"
        )


@dataclass(frozen=True)
class AsymptoticResult:
    """An approximation value, its regime, and the n-exponent of its
    leading order (alpha - 1/2 exterior, -alpha interior, 1/2 on the
    segment, 2/3 at the endpoint)."""

    value: object
    regime: RegimeTag
    leading_order: Fraction


def _require(tag: RegimeTag, z, tol: float, precision_bits: int):
    found = classify(z, tol=tol, precision_bits=precision_bits)
    if found.tag is not tag:
        raise RegimeError(tag, found)


def exterior_approx(params: PolyParams, z, precision_bits: int,
                    classify_tol: float = 1e-12) -> AsymptoticResult:
    """Leading-order exterior approximation of F_n(z)."""
    if params.n < 1:
        raise ValueError("exterior approximation needs n >= 1")
    _require(RegimeTag.EXTERIOR, z, classify_tol, precision_bits)
    n, alpha = params.n, params.alpha
    work = precision_bits + GUARD_BITS
    w = joukowsky_inverse(z, work)
    zc = z.to_precision(work) if isinstance(z, BigComplex) else (
        z if isinstance(z, GaussianRational) else GaussianRational(z, 0)
    ).to_bigcomplex(work)
    s = w - zc
    phi = w * (-(s + 1) / zc).exp()
    with gmpy2.context(precision=work):
        root_n = gmpy2.sqrt(mpfr(n))
        amp = mpfr(n) ** alpha / root_n
        half_pi_root = gmpy2.sqrt(pi_value(work) / 2)
        gamma = gamma_pos_int(alpha)
        scale = amp * half_pi_root / mpfr(mpq(gamma.numerator, gamma.denominator))
    value = (s + 1) / zc
    value = value ** (alpha - 1)
    value = value / (s / zc).sqrt()
    value = value * (phi ** n) * scale
    if n % 2 == 1:
        value = -value
    return AsymptoticResult(
        value=value.to_precision(precision_bits),
        regime=RegimeTag.EXTERIOR,
        leading_order=Fraction(2 * alpha - 1, 2),
    )


def interior_approx(params: PolyParams, z, precision_bits: int,
                    classify_tol: float = 1e-12) -> AsymptoticResult:
    """Leading-order interior approximation of F_n(z)."""
    if params.n < 1:
        raise ValueError("interior approximation needs n >= 1")
    _require(RegimeTag.INTERIOR, z, classify_tol, precision_bits)
    n, alpha = params.n, params.alpha
    work = precision_bits + GUARD_BITS
    zc = z.to_precision(work) if isinstance(z, BigComplex) else (
        z if isinstance(z, GaussianRational) else GaussianRational(z, 0)
    ).to_bigcomplex(work)
    with gmpy2.context(precision=work):
        scale = (mpfr(2) / n) ** alpha * gamma_half_shift(alpha, work) / \
            gmpy2.sqrt(pi_value(work))
    value = (-1 / zc) ** alpha * scale
    return AsymptoticResult(
        value=value.to_precision(precision_bits),
        regime=RegimeTag.INTERIOR,
        leading_order=Fraction(-alpha),
    )


def _validate_open_segment_y(y) -> Fraction:
    yq = Fraction(y) if not isinstance(y, Fraction) else y
    if not 0 < yq < 1:
        raise ValueError("y must be a rational in (0, 1)")
    return yq


def oscillation_phase(n: int, y, precision_bits: int):
    """A(n, y) = n (sqrt(1 - y^2)/y + asin y) - pi/4 as an mpfr."""
    yq = _validate_open_segment_y(y)
    with gmpy2.context(precision=precision_bits):
        yv = mpfr(mpq(yq.numerator, yq.denominator))
        rad = Fraction(1) - yq * yq
        root = gmpy2.sqrt(mpfr(mpq(rad.numerator, rad.denominator)))
        return n * (root / yv + gmpy2.asin(yv)) - pi_value(precision_bits) / 4


def segment_approx(n: int, y, precision_bits: int) -> AsymptoticResult:
    """Oscillatory approximation of the segment target quantity.

    Valid on the open segment 0 < y < 1.  The cos branch serves even n
    and the sin branch odd n; both carry the envelope
    sqrt(n pi y / (2 sqrt(1 - y^2))).
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be an integer >= 1")
    yq = _validate_open_segment_y(y)
    work = precision_bits + GUARD_BITS
    with gmpy2.context(precision=work):
        yv = mpfr(mpq(yq.numerator, yq.denominator))
        rad = Fraction(1) - yq * yq
        root = gmpy2.sqrt(mpfr(mpq(rad.numerator, rad.denominator)))
        env = gmpy2.sqrt(n * pi_value(work) * yv / (2 * root))
        a = oscillation_phase(n, yq, work)
        osc = gmpy2.cos(a) if n % 2 == 0 else gmpy2.sin(a)
        value = -env * osc
    return AsymptoticResult(
        value=round_real(value, precision_bits),
        regime=RegimeTag.SEGMENT_INTERIOR,
        leading_order=Fraction(1, 2),
    )


def endpoint_approx(n: int, precision_bits: int) -> AsymptoticResult:
    """Corner approximation of the target quantity at y = 1.

    The amplitude is 6^(1/3) Gamma(1/3) / (4 sqrt(3) y) * n^(2/3) with
    y = 1, and the sign repeats with period four in n.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be an integer >= 1")
    work = precision_bits + GUARD_BITS
    with gmpy2.context(precision=work):
        sixth_root = gmpy2.root(mpfr(6), 3)
        coef = sixth_root * gamma_one_third(work) / (4 * gmpy2.sqrt(mpfr(3)) * _ENDPOINT_Y)
        coef = coef * gmpy2.root(mpfr(n), 3) ** 2
        if n % 2 == 0:
            sign = -1 if (n // 2) % 2 == 0 else 1
        else:
            sign = 1 if ((n + 1) // 2) % 2 == 0 else -1
        value = sign * coef
    return AsymptoticResult(
        value=round_real(value, precision_bits),
        regime=RegimeTag.SEGMENT_ENDPOINT,
        leading_order=Fraction(2, 3),
    )


def phase_minus(theta, y, precision_bits: int):
    """The slow half-phase: phi_minus(theta) = -cos(theta)/y - theta."""
    with gmpy2.context(precision=precision_bits):
        t = mpfr(mpq(theta.numerator, theta.denominator)) if isinstance(theta, Fraction) else mpfr(theta)
        yv = mpfr(mpq(y.numerator, y.denominator)) if isinstance(y, Fraction) else mpfr(y)
        return -gmpy2.cos(t) / yv - t


def phase_plus(theta, y, precision_bits: int):
    """The fast half-phase: phi_plus(theta) = -cos(theta)/y + theta."""
    with gmpy2.context(precision=precision_bits):
        t = mpfr(mpq(theta.numerator, theta.denominator)) if isinstance(theta, Fraction) else mpfr(theta)
        yv = mpfr(mpq(y.numerator, y.denominator)) if isinstance(y, Fraction) else mpfr(y)
        return -gmpy2.cos(t) / yv + t


@dataclass(frozen=True)
class PhaseData:
    """Stationary structure of phi_minus on (0, pi) for a given y.

    For 0 < y < 1 there are two stationary points asin(y) and
    pi - asin(y) with opposite second derivatives +-sqrt(1-y^2)/y and
    phase values summing to -pi.  At y = 1 they coalesce at pi/2 where
    the second derivative vanishes and the third equals -1.  phi_plus
    has no stationary point for y > 0, which is why its integral
    contributes at a lower order.
    """

    y: Fraction
    stationary_points: List[object]
    phase_values: List[object]
    second_derivatives: List[object]
    coalesced: bool
    third_derivative: Optional[object]


def phase_data(y, precision_bits: int) -> PhaseData:
    yq = Fraction(y) if not isinstance(y, Fraction) else y
    if not 0 < yq <= 1:
        raise ValueError("y must be a rational in (0, 1]")
    with gmpy2.context(precision=precision_bits):
        yv = mpfr(mpq(yq.numerator, yq.denominator))
        if yq == 1:
            half_pi = pi_value(precision_bits) / 2
            return PhaseData(
                y=yq,
                stationary_points=[half_pi],
                phase_values=[-half_pi],
                second_derivatives=[mpfr(0)],
                coalesced=True,
                third_derivative=mpfr(-1),
            )
        theta1 = gmpy2.asin(yv)
        theta2 = pi_value(precision_bits) - theta1
        rad = Fraction(1) - yq * yq
        root = gmpy2.sqrt(mpfr(mpq(rad.numerator, rad.denominator)))
        curv = root / yv
        return PhaseData(
            y=yq,
            stationary_points=[theta1, theta2],
            phase_values=[
                phase_minus(theta1, yq, precision_bits),
                phase_minus(theta2, yq, precision_bits),
            ],
            second_derivatives=[curv, -curv],
            coalesced=False,
            third_derivative=None,
        )


def stationary_phase_minus(n: int, y, precision_bits: int) -> BigComplex:
    """Stationary-phase approximation of the slow half-phase integral.

    Even n: 2 y sqrt(2 pi y / (n sqrt(1 - y^2))) cos(A), purely real.
    Odd n: -2 i y sqrt(2 pi y / (n sqrt(1 - y^2))) sin(A), purely
    imaginary.  A is the same phase as in the segment approximation.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be an integer >= 1")
    yq = _validate_open_segment_y(y)
    work = precision_bits + GUARD_BITS
    with gmpy2.context(precision=work):
        yv = mpfr(mpq(yq.numerator, yq.denominator))
        rad = Fraction(1) - yq * yq
        root = gmpy2.sqrt(mpfr(mpq(rad.numerator, rad.denominator)))
        env = 2 * yv * gmpy2.sqrt(2 * pi_value(work) * yv / (n * root))
        a = oscillation_phase(n, yq, work)
        if n % 2 == 0:
            raw = mpc(env * gmpy2.cos(a), 0)
        else:
            raw = mpc(0, -env * gmpy2.sin(a))
    return BigComplex._wrap(raw, work).to_precision(precision_bits)


def stationary_phase_minus_endpoint(n: int, precision_bits: int) -> BigComplex:
    """Coalesced-point approximation of the slow half-phase integral at
    y = 1: Gamma(1/3) (-i)^n / sqrt(3) * (6/n)^(1/3)."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be an integer >= 1")
    work = precision_bits + GUARD_BITS
    with gmpy2.context(precision=work):
        mag = gamma_one_third(work) / gmpy2.sqrt(mpfr(3)) * \
            gmpy2.root(mpfr(6) / n, 3)
        unit = [mpc(1, 0), mpc(0, -1), mpc(-1, 0), mpc(0, 1)][n % 4]
        raw = unit * mag
    return BigComplex._wrap(raw, work).to_precision(precision_bits)
