"""Exact rational and arbitrary-precision complex arithmetic.

Two layers of number types back everything else in the package:

* exact carriers: ``fractions.Fraction`` for rationals and
  :class:`GaussianRational` for complex numbers with rational real and
  imaginary parts.  Arithmetic on these is exact, so polynomial
  evaluations stay representable with no rounding at all.
* :class:`BigComplex`, a thin wrapper around ``gmpy2.mpc`` that carries
  its precision in bits and propagates the minimum precision of the
  operands through arithmetic.  All gmpy2 operations run inside an
  explicit context, since the library's global default is 53 bits.

The module also provides the handful of special-function values the
asymptotic formulas need (Pochhammer symbols, generalized binomials,
gamma at integers, half-integers and 1/3, and points on the unit
circle), each with an explicit exactness contract.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

import gmpy2
from gmpy2 import mpc, mpfr, mpq

GUARD_BITS = 32

RationalLike = Union[int, Fraction]

_RATIONAL_RE = _re.compile(r"[+-]?\d+(?:/\d+)?")
_PAIR_RE = _re.compile(
    r"\(\s*(?P<re>[+-]?\d+(?:/\d+)?)\s*,\s*(?P<im>[+-]?\d+(?:/\d+)?)\s*\)"
)
# a/b+c/di with an optional real part; the trailing i is mandatory
_COMPLEX_RE = _re.compile(
    r"(?:(?P<re>[+-]?\d+(?:/\d+)?)(?=[+-]))?(?P<im>[+-]?\d+(?:/\d+)?)i"
)


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or ``p`` with optional sign into a Fraction.

    Raises ValueError for anything else (decimals, spaces, empty
    denominators and so on).
    """
    s = text.strip()
    if not _RATIONAL_RE.fullmatch(s):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(s)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


@dataclass(frozen=True)
class GaussianRational:
    """Complex number with exact rational real and imaginary parts."""

    re: Fraction
    im: Fraction

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    @staticmethod
    def parse(text: str) -> "GaussianRational":
        """Parse ``a/b+c/di``, ``(a/b, c/d)`` or a bare rational."""
        s = text.strip().replace(" ", "")
        m = _PAIR_RE.fullmatch(text.strip())
        if m:
            return GaussianRational(Fraction(m["re"]), Fraction(m["im"]))
        m = _COMPLEX_RE.fullmatch(s)
        if m:
            re_part = Fraction(m["re"]) if m["re"] else Fraction(0)
            return GaussianRational(re_part, Fraction(m["im"]))
        if _RATIONAL_RE.fullmatch(s):
            return GaussianRational(Fraction(s), Fraction(0))
        raise ValueError(f"not a Gaussian rational literal: {text!r}")

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def to_bigcomplex(self, precision_bits: int) -> "BigComplex":
        return BigComplex(self.re, self.im, precision_bits=precision_bits)


def _to_mpfr(x, ctx_prec: int):
    """Convert an exact or mpfr value to mpfr under an active context."""
    if isinstance(x, Fraction):
        return mpfr(mpq(x.numerator, x.denominator))
    return mpfr(x)


class BigComplex:
    """Arbitrary-precision complex value tagged with its precision.

    Construction from exact inputs rounds each part once, correctly, to
    ``precision_bits``.  Binary operations between two BigComplex
    values run at the minimum of the two precisions; exact operands
    (int, Fraction, GaussianRational) never lower the precision.
    """

    __slots__ = ("_z", "_prec")

    def __init__(self, re=0, im=0, precision_bits: int = 128):
        if precision_bits < 2:
            raise ValueError("precision_bits must be at least 2")
        with gmpy2.context(precision=precision_bits):
            self._z = mpc(_to_mpfr(re, precision_bits), _to_mpfr(im, precision_bits))
        self._prec = precision_bits

    @classmethod
    def _wrap(cls, z, prec: int) -> "BigComplex":
        obj = object.__new__(cls)
        obj._z = z
        obj._prec = prec
        return obj

    @property
    def precision_bits(self) -> int:
        return self._prec

    @property
    def real(self):
        return self._z.real

    @property
    def imag(self):
        return self._z.imag

    def _operand(self, other):
        """Return (raw value, result precision) or None."""
        if isinstance(other, BigComplex):
            return other._z, min(self._prec, other._prec)
        if isinstance(other, (int, Fraction)):
            f = _as_fraction(other)
            return mpq(f.numerator, f.denominator), self._prec
        if isinstance(other, GaussianRational):
            # convert at the result precision, inside the caller's context
            return other, self._prec
        if isinstance(other, mpfr):
            return other, min(self._prec, other.precision)
        return None

    def _binary(self, other, op, reflected=False):
        pair = self._operand(other)
        if pair is None:
            return NotImplemented
        raw, prec = pair
        with gmpy2.context(precision=prec):
            if isinstance(raw, GaussianRational):
                raw = mpc(_to_mpfr(raw.re, prec), _to_mpfr(raw.im, prec))
            a, b = (raw, self._z) if reflected else (self._z, raw)
            return BigComplex._wrap(op(a, b), prec)

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    def __radd__(self, other):
        return self._binary(other, lambda a, b: a + b, reflected=True)

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binary(other, lambda a, b: a - b, reflected=True)

    def __mul__(self, other):
        return self._binary(other, lambda a, b: a * b)

    def __rmul__(self, other):
        return self._binary(other, lambda a, b: a * b, reflected=True)

    def __truediv__(self, other):
        return self._binary(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return self._binary(other, lambda a, b: a / b, reflected=True)

    def __neg__(self):
        with gmpy2.context(precision=self._prec):
            return BigComplex._wrap(-self._z, self._prec)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        with gmpy2.context(precision=self._prec):
            return BigComplex._wrap(self._z ** k, self._prec)

    def __abs__(self):
        with gmpy2.context(precision=self._prec):
            return abs(self._z)

    def conjugate(self) -> "BigComplex":
        with gmpy2.context(precision=self._prec):
            return BigComplex._wrap(gmpy2.mpc(self._z.real, -self._z.imag), self._prec)

    def exp(self) -> "BigComplex":
        with gmpy2.context(precision=self._prec):
            return BigComplex._wrap(gmpy2.exp(self._z), self._prec)

    def sqrt(self) -> "BigComplex":
        """Principal square root (branch cut on the negative real axis)."""
        with gmpy2.context(precision=self._prec):
            return BigComplex._wrap(gmpy2.sqrt(self._z), self._prec)

    def to_precision(self, precision_bits: int) -> "BigComplex":
        with gmpy2.context(precision=precision_bits):
            return BigComplex._wrap(mpc(self._z), precision_bits)

    def __eq__(self, other):
        if isinstance(other, BigComplex):
            return self._z == other._z
        if isinstance(other, (int, Fraction, GaussianRational)):
            pair = self._operand(other)
            raw = pair[0]
            if isinstance(raw, GaussianRational):
                return (self._z.real == mpq(raw.re.numerator, raw.re.denominator)
                        and self._z.imag == mpq(raw.im.numerator, raw.im.denominator))
            return self._z == raw
        return NotImplemented

    def __hash__(self):
        return hash((self._z.real, self._z.imag))

    def __repr__(self):
        return f"BigComplex({self._z.real!r}, {self._z.imag!r}, precision_bits={self._prec})"

    def __str__(self):
        return str(self._z)


def pochhammer(a, k: int) -> Fraction:
    """Rising factorial (a)_k = a (a+1) ... (a+k-1), exactly.

    (a)_0 = 1 for every a, including a = 0.
    """
    if k < 0:
        raise ValueError("pochhammer needs k >= 0")
    a = _as_fraction(a)
    out = Fraction(1)
    for j in range(k):
        out *= a + j
    return out


def gen_binomial(a, k: int) -> Fraction:
    """Generalized binomial coefficient C(a, k) for rational a.

    Computed as (-1)^k (-a)_k / k!, which agrees with the usual integer
    binomial when a is a nonnegative integer.
    """
    if k < 0:
        raise ValueError("gen_binomial needs k >= 0")
    a = _as_fraction(a)
    out = Fraction(1)
    for j in range(k):
        out *= (a - j)
        out /= (j + 1)
    return out


def gamma_pos_int(alpha: int) -> Fraction:
    """Gamma(alpha) = (alpha-1)! for integer alpha >= 1, exactly."""
    if not isinstance(alpha, int) or alpha < 1:
        raise ValueError("gamma_pos_int needs an integer alpha >= 1")
    out = Fraction(1)
    for j in range(2, alpha):
        out *= j
    return out


@lru_cache(maxsize=None)
def _pi(prec: int):
    with gmpy2.context(precision=prec):
        return gmpy2.const_pi()


@lru_cache(maxsize=None)
def _sqrt_pi(prec: int):
    with gmpy2.context(precision=prec):
        return gmpy2.sqrt(gmpy2.const_pi())


def pi_value(precision_bits: int):
    """pi as an mpfr with precision_bits bits."""
    return _pi(precision_bits)


def round_real(x, precision_bits: int):
    """Round an mpfr (or exact value) to precision_bits bits."""
    with gmpy2.context(precision=precision_bits):
        return mpfr(_to_mpfr(x, precision_bits))


_round_real = round_real


def gamma_half_shift(alpha: int, precision_bits: int):
    """Gamma(alpha + 1/2) = (1/2)_alpha sqrt(pi) for integer alpha >= 0.

    The rational factor is exact; only the final multiplication by
    sqrt(pi) rounds, so the result is accurate to about a unit in the
    last place at the requested precision.
    """
    if not isinstance(alpha, int) or alpha < 0:
        raise ValueError("gamma_half_shift needs an integer alpha >= 0")
    work = precision_bits + GUARD_BITS
    factor = pochhammer(Fraction(1, 2), alpha)
    with gmpy2.context(precision=work):
        v = mpfr(mpq(factor.numerator, factor.denominator)) * _sqrt_pi(work)
    return _round_real(v, precision_bits)


def gamma_one_third(precision_bits: int):
    """Gamma(1/3) to the requested precision (at least 16 bits)."""
    if precision_bits < 16:
        raise ValueError("gamma_one_third needs at least 16 bits")
    work = precision_bits + GUARD_BITS
    with gmpy2.context(precision=work):
        v = gmpy2.gamma(mpfr(1) / 3)
    return _round_real(v, precision_bits)


def exp_unit(theta, precision_bits: int) -> BigComplex:
    """exp(i * theta) with both parts correctly rounded from theta.

    theta may be exact (int or Fraction) or an mpfr.  Negating theta
    conjugates the result exactly, which the parity identities rely on.
    """
    with gmpy2.context(precision=precision_bits):
        t = _to_mpfr(theta, precision_bits)
        s, c = gmpy2.sin_cos(t)
        return BigComplex._wrap(mpc(c, s), precision_bits)
