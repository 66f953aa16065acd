"""High-precision quadrature for the finite Fourier transforms.

All three integral operators work on the substituted form over
theta in [0, pi] (t = cos theta absorbs the endpoint weight):

* chebyshev_fourier:   integral of cos(n theta) e^(-i n cos(theta)/y)
                       sin(theta)
* phase_split_integrals: the two half-phase integrals with
                       e^(i n (-cos(theta)/y +- theta)), whose mean is
                       the Chebyshev transform
* jacobi_fourier:      integral of P_n^(alpha,beta)(cos theta)
                       e^(i lambda cos theta) sin(theta)

The scheme is deliberately blunt: composite Gauss-Legendre with a
fixed node count per panel, a panel count that scales with the
oscillation budget, and an a-posteriori error estimate from one panel
doubling.  Doubling continues until the estimate clears the target
2^(-precision_bits/2) or the refinement limit runs out.  The returned
value is rounded to the bits the estimate certifies.  Panel sums are
combined pairwise in a fixed order, so results are bit-for-bit
deterministic for a given configuration.

jacobi_fourier_closed_form is the quadrature-free counterpart of
jacobi_fourier for lambda != 0: a pair of terminating 3F1 sums at
arguments +-i/(2 lambda), one per endpoint of the integral.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

import gmpy2
from gmpy2 import mpc, mpfr, mpq

from .arith import (
    GUARD_BITS,
    BigComplex,
    GaussianRational,
    exp_unit,
    pi_value,
    pochhammer,
    round_real,
)
from .hyper import Terminating3F1Spec, jacobi_coefficients, terminating_3f1_float


class QuadratureConvergenceError(RuntimeError):
    """Panel doubling hit the refinement limit above the error target."""


@dataclass(frozen=True)
class QuadratureConfig:
    """Knobs for the composite rule.

    panel_count None means: start from the oscillation-scaled default.
    refinement_limit bounds the number of panel doublings tried after
    the initial estimate.
    """

    panel_count: Optional[int] = None
    nodes_per_panel: int = 16
    precision_bits: int = 256
    refinement_limit: int = 6

    def __post_init__(self):
        if self.panel_count is not None and self.panel_count < 1:
            raise ValueError("panel_count must be >= 1")
        if self.nodes_per_panel < 2:
            raise ValueError("nodes_per_panel must be >= 2")
        if self.precision_bits < 16:
            raise ValueError("precision_bits must be >= 16")
        if self.refinement_limit < 0:
            raise ValueError("refinement_limit must be >= 0")


@dataclass(frozen=True)
class QuadratureResult:
    value: BigComplex
    error_estimate: object
    panels: int


@dataclass(frozen=True)
class PhaseSplitResult:
    plus: BigComplex
    minus: BigComplex
    error_estimate: object
    panels: int


@lru_cache(maxsize=None)
def _legendre_rule(order: int, precision_bits: int):
    """Gauss-Legendre nodes and weights on [-1, 1].

    Newton iteration on the Legendre recurrence from Chebyshev-angle
    seeds; cached per (order, precision).
    """
    with gmpy2.context(precision=precision_bits):
        eps = mpfr(2) ** (10 - precision_bits)
        pi = pi_value(precision_bits)
        pairs = []
        for i in range(1, order // 2 + 1 + (order % 2)):
            x = gmpy2.cos(pi * (4 * i - 1) / (4 * order + 2))
            dp = mpfr(0)
            for _ in range(200):
                p0, p1 = mpfr(1), x
                for k in range(2, order + 1):
                    p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
                dp = order * (x * p1 - p0) / (x * x - 1)
                dx = p1 / dp
                x = x - dx
                if abs(dx) < eps:
                    break
            w = 2 / ((1 - x * x) * dp * dp)
            pairs.append((x, w))
        nodes = []
        # roots come out in descending order; mirror to the full set
        for x, w in pairs:
            nodes.append((-x, w))
        middle = order % 2 == 1
        for x, w in reversed(pairs[: order // 2] if middle else pairs):
            nodes.append((x, w))
        if middle:
            # the central node of an odd rule is exactly zero
            nodes[order // 2] = (mpfr(0), nodes[order // 2][1])
        return tuple(nodes)


def _pairwise(vals):
    n = len(vals)
    if n == 1:
        return vals[0]
    mid = n // 2
    return _pairwise(vals[:mid]) + _pairwise(vals[mid:])


def _composite(f, panels: int, order: int, work: int):
    """Composite rule for f over [0, pi]; f maps mpfr -> mpc/tuple."""
    rule = _legendre_rule(order, work + 64)
    with gmpy2.context(precision=work):
        h = pi_value(work) / panels
        half_h = h / 2
        first = None
        sums = []
        for p in range(panels):
            a = h * p + half_h
            acc = None
            for x, wgt in rule:
                v = f(a + half_h * x)
                if isinstance(v, tuple):
                    acc = tuple(wgt * u for u in v) if acc is None else \
                        tuple(s + wgt * u for s, u in zip(acc, v))
                else:
                    acc = wgt * v if acc is None else acc + wgt * v
            if isinstance(acc, tuple):
                sums.append(tuple(u * half_h for u in acc))
            else:
                sums.append(acc * half_h)
        if isinstance(sums[0], tuple):
            parts = len(sums[0])
            return tuple(
                _pairwise([s[j] for s in sums]) for j in range(parts)
            )
        return _pairwise(sums)


def _auto_panels(oscillations) -> int:
    return max(32, math.ceil(4 * oscillations))


def _validate_y(y) -> Fraction:
    yq = Fraction(y) if not isinstance(y, Fraction) else y
    if yq == 0 or abs(yq) > 1:
        raise ValueError("y must be a nonzero rational with |y| <= 1")
    return yq


def _refine(make_values, start_panels: int, config: QuadratureConfig):
    """Run the doubling loop; make_values(panels) -> tuple of mpc."""
    work = config.precision_bits + GUARD_BITS
    with gmpy2.context(precision=work):
        target = mpfr(2) ** (-(config.precision_bits // 2))
    panels = start_panels
    prev = make_values(panels)
    for _ in range(config.refinement_limit):
        cur = make_values(2 * panels)
        with gmpy2.context(precision=work):
            est = max(abs(a - b) for a, b in zip(prev, cur))
        if est <= target:
            return cur, est, 2 * panels
        prev, panels = cur, 2 * panels
    raise QuadratureConvergenceError(
        f"estimate stuck above 2^-{config.precision_bits // 2} "
        f"after {panels} panels"
    )


def _finish(raw, config: QuadratureConfig) -> BigComplex:
    keep = max(16, config.precision_bits // 2)
    return BigComplex._wrap(raw, config.precision_bits + GUARD_BITS).to_precision(keep)


def chebyshev_fourier(n: int, y, config: QuadratureConfig = QuadratureConfig()) -> QuadratureResult:
    """Finite Fourier transform of T_n against e^(-i n t / y)."""
    if not isinstance(n, int) or n < 0:
        raise ValueError("n must be an integer >= 0")
    yq = _validate_y(y)
    work = config.precision_bits + GUARD_BITS
    with gmpy2.context(precision=work):
        ny = mpfr(mpq((Fraction(n) / yq).numerator, (Fraction(n) / yq).denominator))

    def f(theta):
        s, c = gmpy2.sin_cos(theta)
        cn = gmpy2.cos(n * theta)
        se, ce = gmpy2.sin_cos(-ny * c)
        return mpc(ce, se) * (cn * s)

    def values(panels):
        return (_composite(f, panels, config.nodes_per_panel, work),)

    start = config.panel_count or _auto_panels(n * (1 + 1 / abs(yq)))
    (raw,), est, panels = _refine(values, start, config)
    return QuadratureResult(
        value=_finish(raw, config),
        error_estimate=round_real(est, 64),
        panels=panels,
    )


def phase_split_integrals(n: int, y, config: QuadratureConfig = QuadratureConfig()) -> PhaseSplitResult:
    """The two half-phase integrals over [0, pi].

    plus carries the phase n(-cos(theta)/y + theta), minus the phase
    n(-cos(theta)/y - theta); their mean is chebyshev_fourier(n, y).
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError("n must be an integer >= 0")
    yq = _validate_y(y)
    work = config.precision_bits + GUARD_BITS
    with gmpy2.context(precision=work):
        inv_y = mpfr(mpq((1 / yq).numerator, (1 / yq).denominator))

    def f(theta):
        s, c = gmpy2.sin_cos(theta)
        base = -inv_y * c
        sp, cp = gmpy2.sin_cos(n * (base + theta))
        sm, cm = gmpy2.sin_cos(n * (base - theta))
        return (mpc(cp, sp) * s, mpc(cm, sm) * s)

    def values(panels):
        return _composite(f, panels, config.nodes_per_panel, work)

    start = config.panel_count or _auto_panels(n * (1 + 1 / abs(yq)))
    (raw_p, raw_m), est, panels = _refine(values, start, config)
    return PhaseSplitResult(
        plus=_finish(raw_p, config),
        minus=_finish(raw_m, config),
        error_estimate=round_real(est, 64),
        panels=panels,
    )


def jacobi_fourier(n: int, alpha, beta, lam,
                   config: QuadratureConfig = QuadratureConfig()) -> QuadratureResult:
    """Finite Fourier transform of P_n^(alpha,beta) against e^(i lambda t).

    lambda may be any real (exact rational or mpfr), including zero.
    alpha, beta > -1 keeps the weightless integrand a genuine
    polynomial-times-exponential with no endpoint surprises.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError("n must be an integer >= 0")
    aq, bq = Fraction(alpha), Fraction(beta)
    if aq <= -1 or bq <= -1:
        raise ValueError("alpha and beta must exceed -1")
    work = config.precision_bits + GUARD_BITS
    scale = Fraction(1, 2 ** n)
    coeffs = [c * scale for c in jacobi_coefficients(n, aq, bq)]
    with gmpy2.context(precision=work):
        cofs = [mpfr(mpq(c.numerator, c.denominator)) for c in coeffs]
        if isinstance(lam, (int, Fraction)):
            lq = Fraction(lam)
            lv = mpfr(mpq(lq.numerator, lq.denominator))
            osc = abs(lq)
        else:
            lv = mpfr(lam)
            osc = abs(float(lam))

    def f(theta):
        s, c = gmpy2.sin_cos(theta)
        minus = [mpfr(1)]
        plus = [mpfr(1)]
        for _ in range(n):
            minus.append(minus[-1] * (c - 1))
            plus.append(plus[-1] * (c + 1))
        poly = mpfr(0)
        for k in range(n + 1):
            poly += cofs[k] * minus[n - k] * plus[k]
        se, ce = gmpy2.sin_cos(lv * c)
        return mpc(ce, se) * (poly * s)

    def values(panels):
        return (_composite(f, panels, config.nodes_per_panel, work),)

    start = config.panel_count or _auto_panels(n + osc)
    (raw,), est, panels = _refine(values, start, config)
    return QuadratureResult(
        value=_finish(raw, config),
        error_estimate=round_real(est, 64),
        panels=panels,
    )


def jacobi_fourier_closed_form(n: int, alpha, beta, lam,
                               precision_bits: int = 256) -> BigComplex:
    """Closed form of jacobi_fourier for lambda != 0.

    Two boundary contributions, each a terminating 3F1 sum:

      (beta+1)_n / (i lambda n!) (-1)^(n+1) e^(-i lambda)
          3F1(n+alpha+beta+1, -n, 1; beta+1; i/(2 lambda))
    + (alpha+1)_n / (i lambda n!) e^(i lambda)
          3F1(n+alpha+beta+1, -n, 1; alpha+1; -i/(2 lambda))

    alpha, beta > -1 so neither lower parameter degenerates.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError("n must be an integer >= 0")
    aq, bq = Fraction(alpha), Fraction(beta)
    if aq <= -1 or bq <= -1:
        raise ValueError("alpha and beta must exceed -1")
    work = precision_bits + GUARD_BITS
    top = aq + bq + n + 1
    factorial = math.factorial(n)
    exact_lambda = isinstance(lam, (int, Fraction))
    if exact_lambda:
        lq = Fraction(lam)
        if lq == 0:
            raise ValueError("lambda must be nonzero; the closed form divides by it")
        half = Fraction(1, 2) / lq
        arg_beta = GaussianRational(0, half)
        arg_alpha = GaussianRational(0, -half)
        e_plus = exp_unit(lq, work)
        e_minus = exp_unit(-lq, work)
        with gmpy2.context(precision=work):
            # 1/(i lambda) = -i/lambda
            neg_inv = Fraction(-1) / lq
            inv_il = mpc(0, mpfr(mpq(neg_inv.numerator, neg_inv.denominator)))
    else:
        with gmpy2.context(precision=work):
            lv = mpfr(lam)
            if lv == 0:
                raise ValueError("lambda must be nonzero; the closed form divides by it")
            half_v = mpfr(1) / (2 * lv)
            arg_beta = BigComplex._wrap(mpc(0, half_v), work)
            arg_alpha = BigComplex._wrap(mpc(0, -half_v), work)
            inv_il = mpc(0, -1 / lv)
        e_plus = exp_unit(lv, work)
        # conjugation negates the angle without re-rounding lv
        e_minus = e_plus.conjugate()
    spec_beta = Terminating3F1Spec(
        (top, Fraction(-n), Fraction(1)), bq + 1, arg_beta, n)
    spec_alpha = Terminating3F1Spec(
        (top, Fraction(-n), Fraction(1)), aq + 1, arg_alpha, n)
    f_beta = terminating_3f1_float(spec_beta, work)
    f_alpha = terminating_3f1_float(spec_alpha, work)
    c_beta = pochhammer(bq + 1, n) / factorial
    c_alpha = pochhammer(aq + 1, n) / factorial
    # the (-1)^(n+1) on the left-endpoint contribution
    sign = -1 if n % 2 == 0 else 1
    inv = BigComplex._wrap(inv_il, work)
    term_beta = (sign * c_beta) * (inv * e_minus * f_beta)
    term_alpha = c_alpha * (inv * e_plus * f_alpha)
    return (term_beta + term_alpha).to_precision(precision_bits)
