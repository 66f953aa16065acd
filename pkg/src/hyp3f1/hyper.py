"""Terminating 3F1 sums, the polynomial family built on them, and the
classical orthogonal polynomials they connect to.

The central object is the degree-n polynomial

    F_n(z) = sum_{k=0}^{n} (-n)_k (n)_k (alpha)_k / ((1/2)_k k!) * (z/(2n))^k

for integer n >= 1 and integer alpha >= 1 (F_0 = 1).  The series
terminates because of the (-n)_k factor, so for rational z the value is
an exact Gaussian rational.  The scaled argument z/(2n) keeps the
family bounded on compact sets as n grows.

A general terminating 3F1 evaluator backs the closed form of the
finite Fourier transform of Jacobi polynomials: with one upper
parameter equal to -n,

    3F1(a, b, c; d; x) = sum_{k=0}^{n} (a)_k (b)_k (c)_k / ((d)_k k!) x^k.

The float path guards against cancellation by recomputing once at a
precision widened by the observed ratio of largest term to result.

On the imaginary segment z = iy the module assembles the alternating
boundary sum

    S(n, y) = (-1)^(n+1) e^(in/y) F_n(-iy) + e^(-in/y) F_n(iy)

whose parity structure (purely imaginary for even n, real for odd n)
follows from F_n having real coefficients, and the associated real
target quantity Im(w) or Re(w) of w = e^(-in/y) F_n(iy).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

import gmpy2
from gmpy2 import mpc, mpfr, mpq

from .arith import (
    GUARD_BITS,
    BigComplex,
    GaussianRational,
    exp_unit,
    gen_binomial,
    round_real,
)

ExactScalar = Union[int, Fraction]
ExactComplex = Union[int, Fraction, GaussianRational]


class PrecisionCeilingError(ArithmeticError):
    """Raised when cancellation pushes the working precision past the cap."""


@dataclass(frozen=True)
class PolyParams:
    """Degree and alpha parameter of the polynomial family."""

    n: int
    alpha: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError("n must be an integer >= 0")
        if not isinstance(self.alpha, int) or self.alpha < 1:
            raise ValueError("alpha must be an integer >= 1")


def _as_gaussian(z: ExactComplex) -> GaussianRational:
    if isinstance(z, GaussianRational):
        return z
    return GaussianRational(z, 0)


def _family_ratio(params: PolyParams, k: int) -> Fraction:
    # term ratio t_{k+1}/t_k before multiplying by z/(2n); the 2 in the
    # numerator clears the half-integer lower parameter (1/2 + k)
    n, alpha = params.n, params.alpha
    return Fraction(2 * (k - n) * (n + k) * (alpha + k), (2 * k + 1) * (k + 1))


def family_exact(params: PolyParams, z: ExactComplex) -> GaussianRational:
    """Evaluate F_n(z) exactly for rational or Gaussian rational z."""
    zg = _as_gaussian(z)
    n = params.n
    if n == 0:
        return GaussianRational(1, 0)
    xre = zg.re / (2 * n)
    xim = zg.im / (2 * n)
    alpha = params.alpha
    tre, tim = Fraction(1), Fraction(0)
    sre, sim = Fraction(1), Fraction(0)
    for k in range(n):
        r = Fraction(2 * (k - n) * (n + k) * (alpha + k), (2 * k + 1) * (k + 1))
        a = tre * r
        b = tim * r
        tre = a * xre - b * xim
        tim = a * xim + b * xre
        sre += tre
        sim += tim
    return GaussianRational(sre, sim)


@dataclass(frozen=True)
class Terminating3F1Spec:
    """Parameters of a terminating 3F1 sum.

    upper holds the three numerator parameters, one of which must equal
    -term_count so the sum stops; lower is the single denominator
    parameter and must not be an integer in (-term_count, 0], which
    would zero a denominator before termination.
    """

    upper: Tuple[Fraction, Fraction, Fraction]
    lower: Fraction
    argument: Union[GaussianRational, BigComplex]
    term_count: int

    def __init__(self, upper, lower, argument, term_count: int):
        if not isinstance(term_count, int) or term_count < 0:
            raise ValueError("term_count must be an integer >= 0")
        up = tuple(Fraction(u) if not isinstance(u, Fraction) else u for u in upper)
        if len(up) != 3:
            raise ValueError("upper must have exactly three parameters")
        if not any(u == -term_count for u in up):
            raise ValueError("one upper parameter must equal -term_count")
        low = Fraction(lower) if not isinstance(lower, Fraction) else lower
        if low.denominator == 1 and -term_count < low <= 0:
            raise ValueError("lower parameter hits zero before the sum terminates")
        # BigComplex arguments are allowed on the float path only
        arg = argument if isinstance(argument, BigComplex) else _as_gaussian(argument)
        object.__setattr__(self, "upper", up)
        object.__setattr__(self, "lower", low)
        object.__setattr__(self, "argument", arg)
        object.__setattr__(self, "term_count", term_count)

    def ratio(self, k: int) -> Fraction:
        """Term ratio t_{k+1}/t_k divided by the argument."""
        a, b, c = self.upper
        num = (a + k) * (b + k) * (c + k)
        den = (self.lower + k) * (k + 1)
        return num / den


def family_spec(params: PolyParams, z: ExactComplex) -> Terminating3F1Spec:
    """The family member F_n(z) written as a terminating 3F1 sum."""
    n = params.n
    if n == 0:
        return Terminating3F1Spec(
            (Fraction(0), Fraction(0), Fraction(params.alpha)),
            Fraction(1, 2), _as_gaussian(z), 0,
        )
    return Terminating3F1Spec(
        (Fraction(-n), Fraction(n), Fraction(params.alpha)),
        Fraction(1, 2),
        _as_gaussian(z) / (2 * n),
        n,
    )


def terminating_3f1_exact(spec: Terminating3F1Spec) -> GaussianRational:
    """Exact evaluation of a terminating 3F1 sum at its rational argument."""
    if not isinstance(spec.argument, GaussianRational):
        raise TypeError("exact evaluation needs a Gaussian rational argument")
    xre, xim = spec.argument.re, spec.argument.im
    tre, tim = Fraction(1), Fraction(0)
    sre, sim = Fraction(1), Fraction(0)
    for k in range(spec.term_count):
        r = spec.ratio(k)
        a = tre * r
        b = tim * r
        tre = a * xre - b * xim
        tim = a * xim + b * xre
        sre += tre
        sim += tim
    return GaussianRational(sre, sim)


@dataclass(frozen=True)
class CancellationReport:
    """Diagnostics from the two-pass float evaluation."""

    max_term_magnitude: object
    result_magnitude: object
    cancellation_bits: int
    working_bits: int


def _series_pass(spec: Terminating3F1Spec, x_raw, work: int):
    """One float pass; returns (sum as mpc, largest term magnitude)."""
    with gmpy2.context(precision=work):
        term = mpc(1)
        total = mpc(1)
        largest = mpfr(1)
        for k in range(spec.term_count):
            r = spec.ratio(k)
            term = term * mpfr(mpq(r.numerator, r.denominator)) * x_raw
            total = total + term
            mag = abs(term)
            if mag > largest:
                largest = mag
        return total, largest


def _argument_raw(argument, work: int):
    if isinstance(argument, BigComplex):
        z = argument.to_precision(work)
        with gmpy2.context(precision=work):
            return mpc(z.real, z.imag)
    g = _as_gaussian(argument)
    with gmpy2.context(precision=work):
        return mpc(
            mpfr(mpq(g.re.numerator, g.re.denominator)),
            mpfr(mpq(g.im.numerator, g.im.denominator)),
        )


def terminating_3f1_float_report(
    spec: Terminating3F1Spec,
    precision_bits: int,
    precision_ceiling: int = 1 << 18,
) -> Tuple[BigComplex, CancellationReport]:
    """Float evaluation with a cancellation-aware second pass.

    The first pass runs at a few guard bits above the request and
    records the largest intermediate term.  The second pass widens the
    working precision by the observed cancellation (log2 of largest
    term over result) so the returned value carries precision_bits
    meaningful bits whenever the ceiling permits.
    """
    work1 = precision_bits + GUARD_BITS
    x1 = _argument_raw(spec.argument, work1)
    total, largest = _series_pass(spec, x1, work1)
    with gmpy2.context(precision=work1):
        mag = abs(total)
        floor = largest * mpfr(2) ** (-work1)
        if mag < floor:
            mag = floor
        lost = gmpy2.log2(largest / mag)
    cancellation_bits = max(0, int(gmpy2.ceil(lost)))
    work2 = precision_bits + cancellation_bits + GUARD_BITS
    if work2 > precision_ceiling:
        raise PrecisionCeilingError(
            f"needs {work2} working bits, ceiling is {precision_ceiling}"
        )
    if cancellation_bits > 0:
        x2 = _argument_raw(spec.argument, work2)
        total, largest = _series_pass(spec, x2, work2)
        with gmpy2.context(precision=work2):
            mag = abs(total)
    value = BigComplex._wrap(total, work2).to_precision(precision_bits)
    report = CancellationReport(
        max_term_magnitude=round_real(largest, precision_bits),
        result_magnitude=round_real(mag, precision_bits),
        cancellation_bits=cancellation_bits,
        working_bits=work2,
    )
    return value, report


def terminating_3f1_float(
    spec: Terminating3F1Spec,
    precision_bits: int,
    precision_ceiling: int = 1 << 18,
) -> BigComplex:
    value, _ = terminating_3f1_float_report(spec, precision_bits, precision_ceiling)
    return value


def family_float(params: PolyParams, z, precision_bits: int,
                 precision_ceiling: int = 1 << 18) -> BigComplex:
    """Float evaluation of F_n(z) for exact or BigComplex z."""
    n = params.n
    if n == 0:
        return BigComplex(1, 0, precision_bits=precision_bits)
    if isinstance(z, BigComplex):
        work = precision_bits + GUARD_BITS
        zc = z.to_precision(work)
        with gmpy2.context(precision=work):
            arg = BigComplex._wrap(mpc(zc.real / (2 * n), zc.imag / (2 * n)), work)
        spec = _FloatArgSpec(params, arg)
    else:
        spec = family_spec(params, z)
    return terminating_3f1_float(spec, precision_bits, precision_ceiling)


class _FloatArgSpec:
    """Family spec whose argument is already a float value."""

    def __init__(self, params: PolyParams, argument: BigComplex):
        self._params = params
        self.argument = argument
        self.term_count = params.n

    def ratio(self, k: int) -> Fraction:
        return _family_ratio(self._params, k)


def jacobi_coefficients(n: int, alpha, beta) -> list:
    """Exact coefficients c_k = C(alpha+n, k) C(beta+n, n-k), k = 0..n."""
    if not isinstance(n, int) or n < 0:
        raise ValueError("n must be an integer >= 0")
    a = Fraction(alpha)
    b = Fraction(beta)
    return [gen_binomial(a + n, k) * gen_binomial(b + n, n - k) for k in range(n + 1)]


def jacobi_poly(n: int, alpha, beta, x) -> Fraction:
    """Jacobi polynomial P_n^(alpha,beta)(x) at rational x, exactly.

    Uses the finite sum
    P_n = 2^(-n) sum_k C(alpha+n, k) C(beta+n, n-k) (x-1)^(n-k) (x+1)^k,
    valid for any rational alpha, beta.
    """
    xq = Fraction(x) if not isinstance(x, Fraction) else x
    coeffs = jacobi_coefficients(n, alpha, beta)
    minus = [Fraction(1)]
    plus = [Fraction(1)]
    for _ in range(n):
        minus.append(minus[-1] * (xq - 1))
        plus.append(plus[-1] * (xq + 1))
    total = Fraction(0)
    for k in range(n + 1):
        total += coeffs[k] * minus[n - k] * plus[k]
    return total / 2 ** n


def chebyshev_t(n: int, x) -> Fraction:
    """Chebyshev polynomial T_n(x) at rational x via the recurrence."""
    if not isinstance(n, int) or n < 0:
        raise ValueError("n must be an integer >= 0")
    xq = Fraction(x) if not isinstance(x, Fraction) else x
    if n == 0:
        return Fraction(1)
    prev, cur = Fraction(1), xq
    for _ in range(n - 1):
        prev, cur = cur, 2 * xq * cur - prev
    return cur


def _validate_segment_y(y, allow_negative: bool):
    yq = Fraction(y) if not isinstance(y, Fraction) else y
    if yq == 0:
        raise ValueError("y must be nonzero")
    if abs(yq) > 1:
        raise ValueError("y must satisfy |y| <= 1")
    if not allow_negative and yq < 0:
        raise ValueError("y must be positive")
    return yq


def conjugate_pair_sum(n: int, y, precision_bits: int) -> BigComplex:
    """The alternating boundary sum S(n, y) on the segment z = iy.

    S = (-1)^(n+1) e^(in/y) F_n(-iy) + e^(-in/y) F_n(iy) with alpha = 1.
    The two terms are exact conjugates up to the sign, so S is purely
    imaginary for even n and purely real for odd n; the rounding of the
    two exponentials preserves that exactly.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError("n must be an integer >= 0")
    yq = _validate_segment_y(y, allow_negative=True)
    work = precision_bits + GUARD_BITS
    theta = Fraction(n) / yq
    e_plus = exp_unit(theta, work)
    e_minus = exp_unit(-theta, work)
    f_plus = family_exact(PolyParams(n, 1), GaussianRational(0, yq))
    f_minus = f_plus.conjugate()
    sign = 1 if n % 2 == 1 else -1
    s = sign * (e_plus * f_minus) + e_minus * f_plus
    return s.to_precision(precision_bits)


def segment_target(n: int, y, precision_bits: int):
    """Real target quantity on the segment: the parity component of
    w = e^(-in/y) F_n(iy), Im(w) for even n and Re(w) for odd n.

    Equals S/(2i) for even n and S/2 for odd n.  Returns an mpfr.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError("n must be an integer >= 0")
    yq = _validate_segment_y(y, allow_negative=False)
    work = precision_bits + GUARD_BITS
    w = exp_unit(-Fraction(n) / yq, work) * family_exact(
        PolyParams(n, 1), GaussianRational(0, yq)
    )
    part = w.imag if n % 2 == 0 else w.real
    return round_real(part, precision_bits)
