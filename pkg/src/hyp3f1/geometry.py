"""Geometry of the critical curve |phi(z)| = 1.

The large-n behaviour of the polynomial family divides the plane into
an exterior region of exponential growth, an interior region of
algebraic decay, and a closed critical curve separating them.  The
curve consists of the imaginary segment [-i, i] together with a lobe
in the right half plane joining the two corner points +-i and crossing
the positive real axis between 2 and 3.

Everything is driven by two maps:

* the inverse Joukowsky-type map w(z) = z + sqrt(z^2 + 1), taking the
  branch with |w| > 1 (and Re w >= 0 on the segment, where both
  candidates have modulus one);
* the comparison factor phi(z) = w * exp(-(1 + s)/z) with s = w - z,
  computed with the same branch of the square root in both places so
  the two pieces stay consistent.

classify() compares |phi| against 1 with a tolerance band, with exact
answers for exact inputs on the segment.  trace_curve() shoots rays
from the origin across the open right half plane, where each ray meets
the lobe exactly once, and appends the segment explicitly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Union

import gmpy2
from gmpy2 import mpc, mpfr, mpq

from .arith import GUARD_BITS, BigComplex, GaussianRational, exp_unit, pi_value

# rays this close to the imaginary axis are skipped; the lobe meets the
# segment at the corners +-i where the radial root-finder degenerates
GUARD_ANGLE = 0.01


class RegimeTag(enum.Enum):
    EXTERIOR = "exterior"
    INTERIOR = "interior"
    SEGMENT_INTERIOR = "segment-interior"
    SEGMENT_ENDPOINT = "segment-endpoint"
    CURVE_OTHER = "curve-other"


@dataclass(frozen=True)
class Regime:
    """Classification of a point, with |phi| when it was computed."""

    tag: RegimeTag
    abs_phi: Optional[object] = None


class CurveTraceError(RuntimeError):
    """A traced ray met the lobe zero times or more than once."""

    def __init__(self, anomalies):
        self.anomalies = anomalies
        desc = ", ".join(f"theta={t}: {c} crossings" for t, c in anomalies)
        super().__init__(f"ray tracing found unexpected crossing counts: {desc}")


PointLike = Union[int, Fraction, GaussianRational, BigComplex]


def _is_exact(z: PointLike) -> bool:
    return isinstance(z, (int, Fraction, GaussianRational))


def _to_gaussian(z) -> GaussianRational:
    if isinstance(z, GaussianRational):
        return z
    return GaussianRational(z, 0)


def joukowsky_inverse(z: PointLike, precision_bits: int) -> BigComplex:
    """w(z) = z + sqrt(z^2 + 1) on the branch with |w| > 1.

    The two candidates z +- sqrt(z^2 + 1) multiply to -1, so exactly
    one has modulus above one unless z lies on the segment [-i, i];
    there both have modulus one and the branch with Re w >= 0 is taken,
    which maps the segment z = iy to w = sqrt(1 - y^2) + iy.
    """
    work = precision_bits + GUARD_BITS
    if _is_exact(z):
        g = _to_gaussian(z)
        if g.re == 0 and abs(g.im) <= 1:
            # exact segment input: take the closed form directly
            rad = 1 - g.im * g.im
            with gmpy2.context(precision=work):
                re = gmpy2.sqrt(mpfr(mpq(rad.numerator, rad.denominator)))
                im = mpfr(mpq(g.im.numerator, g.im.denominator))
                return BigComplex._wrap(mpc(re, im), work).to_precision(precision_bits)
        zc = g.to_bigcomplex(work)
    elif isinstance(z, BigComplex):
        zc = z.to_precision(work)
    else:
        raise TypeError(f"unsupported point type: {type(z).__name__}")
    s = (zc * zc + 1).sqrt()
    w1 = zc + s
    w2 = zc - s
    m1 = abs(w1)
    m2 = abs(w2)
    with gmpy2.context(precision=work):
        gap = abs(m1 - m2)
        tie = gap <= gmpy2.mpfr(2) ** (4 - work // 2)
    if tie:
        w = w1 if w1.real >= 0 else w2
    else:
        w = w1 if m1 > m2 else w2
    return w.to_precision(precision_bits)


def growth_factor(z: PointLike, precision_bits: int) -> BigComplex:
    """phi(z) = w(z) * exp(-(1 + s)/z) with s = w - z.

    The same square root drives w and s, so the branch choice cancels
    consistently.  z = 0 is rejected; the factor has an essential
    singularity there.
    """
    work = precision_bits + GUARD_BITS
    if _is_exact(z):
        g = _to_gaussian(z)
        if g.is_zero():
            raise ValueError("growth factor is singular at z = 0")
        zc = g.to_bigcomplex(work)
    elif isinstance(z, BigComplex):
        if z.real == 0 and z.imag == 0:
            raise ValueError("growth factor is singular at z = 0")
        zc = z.to_precision(work)
    else:
        raise TypeError(f"unsupported point type: {type(z).__name__}")
    w = joukowsky_inverse(zc, work)
    s = w - zc
    phi = w * (-(s + 1) / zc).exp()
    return phi.to_precision(precision_bits)


def _abs_phi(zc: BigComplex, work: int):
    return abs(growth_factor(zc, work))


def classify(z: PointLike, tol: float = 1e-12, precision_bits: int = 128) -> Regime:
    """Place a point relative to the critical curve.

    Exact inputs on the closed segment [-i, i] are recognised exactly
    (including z = 0, where phi itself is singular).  Everywhere else
    |phi| is compared against 1 with the tolerance band: above 1 + tol
    is exterior, below 1 - tol is interior, inside the band the point
    is reported as on the curve without distinguishing lobe from
    segment.
    """
    if _is_exact(z):
        g = _to_gaussian(z)
        if g.re == 0:
            if abs(g.im) < 1:
                return Regime(RegimeTag.SEGMENT_INTERIOR)
            if abs(g.im) == 1:
                return Regime(RegimeTag.SEGMENT_ENDPOINT)
    elif isinstance(z, BigComplex):
        if z.real == 0:
            if abs(z.imag) < 1:
                return Regime(RegimeTag.SEGMENT_INTERIOR)
            if abs(z.imag) == 1:
                return Regime(RegimeTag.SEGMENT_ENDPOINT)
    work = precision_bits + GUARD_BITS
    a = abs(growth_factor(z, precision_bits))
    with gmpy2.context(precision=work):
        t = mpfr(tol)
        if a > 1 + t:
            return Regime(RegimeTag.EXTERIOR, a)
        if a < 1 - t:
            return Regime(RegimeTag.INTERIOR, a)
    return Regime(RegimeTag.CURVE_OTHER, a)


@dataclass(frozen=True)
class CurveTrace:
    """Sampled points of the critical curve.

    Parallel lists: angles[i] is the ray angle (or +-pi/2 for segment
    samples), points[i] the located point, residuals[i] the achieved
    | |phi| - 1 | (for lobe points) or the evaluated residual (for
    segment samples, where it only reflects rounding).
    """

    angles: List[object]
    points: List[BigComplex]
    residuals: List[object]

    def __len__(self):
        return len(self.points)


def _lobe_radius(theta, tol, work: int):
    """Radius r with | |phi(r e^(i theta))| - 1 | <= tol on one ray.

    Returns (radius, residual, crossing_count); crossing_count is the
    number of sign changes seen on the sampling grid, and the radius is
    only meaningful when it equals one.
    """
    unit = exp_unit(theta, work)

    def g(r):
        with gmpy2.context(precision=work):
            z = BigComplex._wrap(mpc(unit.real * r, unit.imag * r), work)
            return _abs_phi(z, work) - 1

    with gmpy2.context(precision=work):
        lo = mpfr("0.001")
        hi = mpfr(10)
        samples = 64
        # log-spaced radial grid
        step = gmpy2.exp(gmpy2.log(hi / lo) / (samples - 1))
        radii = []
        r = lo
        for _ in range(samples):
            radii.append(r)
            r = r * step
    values = [g(r) for r in radii]
    changes = [
        k for k in range(len(values) - 1)
        if (values[k] < 0) != (values[k + 1] < 0)
    ]
    if len(changes) != 1:
        return None, None, len(changes)
    k = changes[0]
    a, b = radii[k], radii[k + 1]
    fa = values[k]
    with gmpy2.context(precision=work):
        tolv = mpfr(tol)
        for _ in range(4 * work):
            mid = (a + b) / 2
            fm = g(mid)
            if abs(fm) <= tolv:
                return mid, abs(fm), 1
            if (fm < 0) == (fa < 0):
                a, fa = mid, fm
            else:
                b = mid
    return None, None, 1


def trace_curve(angle_count: int = 64, tol: float = 1e-10,
                precision_bits: int = 128) -> CurveTrace:
    """Trace the critical curve: ray-shot lobe plus explicit segment.

    Rays at angle_count midpoint angles across (-pi/2, pi/2) each meet
    the lobe exactly once; a ray meeting it zero times or more than
    once raises CurveTraceError.  The segment [-i, i] is appended as
    evenly spaced samples (skipping y = 0, where phi is singular),
    tagged with angle +-pi/2.  The point list is symmetric under
    conjugation because the angle grids are.
    """
    if not isinstance(angle_count, int) or angle_count < 8:
        raise ValueError("angle_count must be an integer >= 8")
    work = precision_bits + GUARD_BITS
    pi = pi_value(work)
    angles = []
    with gmpy2.context(precision=work):
        guard = mpfr(GUARD_ANGLE)
        for j in range(angle_count):
            theta = -pi / 2 + pi * mpfr(2 * j + 1) / (2 * angle_count)
            if abs(theta) < pi / 2 - guard:
                angles.append(theta)
    out_angles = []
    out_points = []
    out_residuals = []
    anomalies = []
    for theta in angles:
        radius, residual, count = _lobe_radius(theta, tol, work)
        if count != 1 or radius is None:
            anomalies.append((float(theta), count))
            continue
        unit = exp_unit(theta, work)
        with gmpy2.context(precision=work):
            point = BigComplex._wrap(
                mpc(unit.real * radius, unit.imag * radius), work
            ).to_precision(precision_bits)
        out_angles.append(gmpy2.mpfr(theta, precision_bits))
        out_points.append(point)
        out_residuals.append(gmpy2.mpfr(residual, precision_bits))
    if anomalies:
        raise CurveTraceError(anomalies)
    # segment samples: odd subdivision count avoids y = 0 and keeps the
    # grid symmetric with both endpoints included
    m = angle_count if angle_count % 2 == 1 else angle_count + 1
    with gmpy2.context(precision=precision_bits):
        half_pi = pi_value(precision_bits) / 2
    for j in range(m + 1):
        y = Fraction(-1) + Fraction(2 * j, m)
        point = GaussianRational(0, y)
        a = abs(growth_factor(point, precision_bits))
        with gmpy2.context(precision=precision_bits):
            residual = abs(a - 1)
        out_angles.append(-half_pi if y < 0 else half_pi)
        out_points.append(point.to_bigcomplex(precision_bits))
        out_residuals.append(residual)
    return CurveTrace(out_angles, out_points, out_residuals)


def real_axis_crossing(tol: float = 1e-30, precision_bits: int = 192):
    """The lobe's crossing of the positive real axis, in (2, 3).

    Bisects | |phi(x)| - 1 | on [2, 3] down to an interval of width tol
    and returns the midpoint as an mpfr.
    """
    work = precision_bits + GUARD_BITS

    def g(x):
        with gmpy2.context(precision=work):
            return _abs_phi(BigComplex(x, 0, precision_bits=work), work) - 1

    with gmpy2.context(precision=work):
        a = mpfr(2)
        b = mpfr(3)
        fa = g(a)
        fb = g(b)
        if not (fa < 0 < fb):
            raise RuntimeError("bracket [2, 3] does not straddle the crossing")
        tolv = mpfr(tol)
        while b - a > tolv:
            mid = (a + b) / 2
            if g(mid) < 0:
                a = mid
            else:
                b = mid
        return gmpy2.mpfr((a + b) / 2, precision_bits)
