"""Exact family evaluation, the general terminating sum, the classical
polynomials, and the boundary-sum parity structure."""

import math
import random
from fractions import Fraction

import gmpy2
import pytest
from gmpy2 import mpfr

from hyp3f1.arith import BigComplex, GaussianRational, pochhammer
from hyp3f1.hyper import (
    PolyParams,
    PrecisionCeilingError,
    Terminating3F1Spec,
    chebyshev_t,
    conjugate_pair_sum,
    family_exact,
    family_float,
    family_spec,
    jacobi_poly,
    segment_target,
    terminating_3f1_exact,
    terminating_3f1_float,
    terminating_3f1_float_report,
)


def rand_fraction(rng, span=20):
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def leading_coefficient(n: int, alpha: int) -> Fraction:
    """Exact leading coefficient of the degree-n family member."""
    c = (
        pochhammer(-n, n) * pochhammer(n, n) * pochhammer(alpha, n)
        / (pochhammer(Fraction(1, 2), n) * math.factorial(n))
    )
    return c / Fraction(2 * n) ** n


class TestPolyParams:
    def test_validation(self):
        with pytest.raises(ValueError):
            PolyParams(-1, 1)
        with pytest.raises(ValueError):
            PolyParams(3, 0)
        PolyParams(0, 1)


class TestFamilyExact:
    def test_degree_zero(self):
        assert family_exact(PolyParams(0, 5), GaussianRational(7, 9)) == \
            GaussianRational(1, 0)

    def test_degree_one_closed_form(self):
        # F_1(z) = 1 + (-1)(1)(alpha)/((1/2)(1)) * z/2 = 1 - alpha z
        rng = random.Random(3)
        for _ in range(20):
            z = GaussianRational(rand_fraction(rng), rand_fraction(rng))
            for alpha in (1, 2, 3):
                want = GaussianRational(1, 0) - alpha * z
                assert family_exact(PolyParams(1, alpha), z) == want

    def test_conjugation_symmetry(self):
        rng = random.Random(5)
        for _ in range(15):
            n = rng.randint(1, 25)
            alpha = rng.randint(1, 3)
            z = GaussianRational(rand_fraction(rng), rand_fraction(rng))
            left = family_exact(PolyParams(n, alpha), z.conjugate())
            right = family_exact(PolyParams(n, alpha), z).conjugate()
            assert left == right

    @pytest.mark.parametrize("n", [1, 2, 3, 5, 10, 25, 40, 60])
    def test_leading_coefficient_by_differences(self, n):
        # the n-th forward difference at integer nodes isolates n! * lead
        alpha = 2
        total = Fraction(0)
        for j in range(n + 1):
            sign = -1 if (n - j) % 2 else 1
            total += sign * math.comb(n, j) * family_exact(
                PolyParams(n, alpha), GaussianRational(j, 0)).re
        assert total == math.factorial(n) * leading_coefficient(n, alpha)

    def test_accepts_bare_rationals(self):
        assert family_exact(PolyParams(2, 1), Fraction(1, 3)) == \
            family_exact(PolyParams(2, 1), GaussianRational(Fraction(1, 3), 0))


class TestTerminatingSpec:
    def test_requires_negative_integer_upper(self):
        with pytest.raises(ValueError):
            Terminating3F1Spec((1, 2, 3), Fraction(1, 2), GaussianRational(1, 0), 4)

    def test_rejects_degenerate_lower(self):
        with pytest.raises(ValueError):
            Terminating3F1Spec((Fraction(-5), 1, 1), Fraction(-2),
                               GaussianRational(1, 0), 5)
        # -term_count itself is never reached by the denominator
        Terminating3F1Spec((Fraction(-5), 1, 1), Fraction(-5),
                           GaussianRational(1, 0), 5)

    def test_linear_case(self):
        # 3F1(2, -1, 1; 2; q) = 1 - q
        rng = random.Random(9)
        for _ in range(20):
            q = rand_fraction(rng)
            spec = Terminating3F1Spec((2, -1, 1), 2, GaussianRational(q, 0), 1)
            assert terminating_3f1_exact(spec) == GaussianRational(1 - q, 0)

    def test_family_route_consistency(self):
        # the family evaluator and the general sum must agree exactly
        rng = random.Random(15)
        for _ in range(10):
            n = rng.randint(0, 20)
            alpha = rng.randint(1, 4)
            z = GaussianRational(rand_fraction(rng), rand_fraction(rng))
            params = PolyParams(n, alpha)
            direct = family_exact(params, z)
            via_spec = terminating_3f1_exact(family_spec(params, z))
            assert direct == via_spec


class TestFloatPath:
    def test_empty_sum_is_one(self):
        spec = Terminating3F1Spec((0, 1, 1), Fraction(1, 2),
                                  GaussianRational(3, 4), 0)
        v = terminating_3f1_float(spec, 128)
        assert v.real == 1 and v.imag == 0

    def test_matches_exact_path(self):
        rng = random.Random(21)
        prec = 192
        for _ in range(10):
            n = rng.randint(1, 30)
            z = GaussianRational(rand_fraction(rng, 6), rand_fraction(rng, 6))
            params = PolyParams(n, rng.randint(1, 3))
            exact = family_exact(params, z).to_bigcomplex(prec)
            approx = family_float(params, z, prec)
            with gmpy2.context(precision=prec):
                scale = max(abs(exact), mpfr(1))
                assert abs(approx - exact) < scale * mpfr(2) ** (10 - prec)

    def test_bigcomplex_argument(self):
        params = PolyParams(12, 1)
        zr = GaussianRational(Fraction(1, 3), Fraction(-2, 5))
        exact = family_exact(params, zr).to_bigcomplex(160)
        approx = family_float(params, zr.to_bigcomplex(224), 160)
        with gmpy2.context(precision=160):
            assert abs(approx - exact) < mpfr(2) ** -140

    def test_cancellation_report(self):
        # alternating terms at z = 3 wipe out about 90 bits by n = 100
        spec = family_spec(PolyParams(100, 1), GaussianRational(3, 0))
        value, report = terminating_3f1_float_report(spec, 128)
        assert report.cancellation_bits >= 64
        assert report.working_bits >= 128 + report.cancellation_bits
        exact = family_exact(PolyParams(100, 1), GaussianRational(3, 0))
        diff = value - exact.to_bigcomplex(160)
        with gmpy2.context(precision=160):
            assert abs(diff) < abs(exact.to_bigcomplex(160)) * mpfr(2) ** -120

    def test_precision_ceiling(self):
        spec = family_spec(PolyParams(100, 1), GaussianRational(3, 0))
        with pytest.raises(PrecisionCeilingError):
            terminating_3f1_float(spec, 128, precision_ceiling=130)


class TestJacobiAndChebyshev:
    def test_jacobi_low_degrees(self):
        rng = random.Random(27)
        for _ in range(20):
            a, b = rand_fraction(rng, 4), rand_fraction(rng, 4)
            x = rand_fraction(rng)
            assert jacobi_poly(0, a, b, x) == 1
            want = (a + 1) + (a + b + 2) * (x - 1) / 2
            assert jacobi_poly(1, a, b, x) == want

    def test_jacobi_value_at_one(self):
        from hyp3f1.arith import gen_binomial
        for n in range(0, 8):
            a = Fraction(1, 3)
            assert jacobi_poly(n, a, Fraction(2, 5), 1) == gen_binomial(a + n, n)

    def test_jacobi_reflection(self):
        rng = random.Random(33)
        for _ in range(15):
            n = rng.randint(0, 10)
            a, b = rand_fraction(rng, 4), rand_fraction(rng, 4)
            x = rand_fraction(rng)
            left = jacobi_poly(n, a, b, -x)
            right = (-1) ** n * jacobi_poly(n, b, a, x)
            assert left == right

    def test_chebyshev_values(self):
        x = Fraction(2, 7)
        assert chebyshev_t(0, x) == 1
        assert chebyshev_t(1, x) == x
        assert chebyshev_t(5, x) == 16 * x ** 5 - 20 * x ** 3 + 5 * x
        assert chebyshev_t(9, 1) == 1

    def test_chebyshev_composition(self):
        rng = random.Random(37)
        for _ in range(10):
            x = rand_fraction(rng, 5)
            m, k = rng.randint(0, 5), rng.randint(0, 5)
            assert chebyshev_t(m, chebyshev_t(k, x)) == chebyshev_t(m * k, x)

    @pytest.mark.parametrize("n", [0, 1, 2, 5, 10, 20, 40])
    def test_chebyshev_jacobi_bridge(self, n):
        # T_n(x) (1/2)_n = n! P_n^(-1/2,-1/2)(x)
        rng = random.Random(41 + n)
        half = Fraction(-1, 2)
        for _ in range(5):
            x = rand_fraction(rng)
            left = chebyshev_t(n, x) * pochhammer(Fraction(1, 2), n)
            right = math.factorial(n) * jacobi_poly(n, half, half, x)
            assert left == right


class TestBoundarySum:
    def test_known_value_n1(self):
        # S(1, 1/2) = 2 Re(e^(-2i)(1 - i/2)) = 2 cos 2 - sin 2
        s = conjugate_pair_sum(1, Fraction(1, 2), 192)
        with gmpy2.context(precision=224):
            want = 2 * gmpy2.cos(mpfr(2)) - gmpy2.sin(mpfr(2))
            assert abs(s.real - want) < mpfr(2) ** -185
        assert s.imag == 0

    @pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 5, 11, 12, 99, 100])
    def test_parity_exact(self, n):
        for y in (Fraction(1, 4), Fraction(1, 2), Fraction(1)):
            s = conjugate_pair_sum(n, y, 160)
            if n % 2 == 0:
                assert s.real == 0
            else:
                assert s.imag == 0

    def test_negative_y_mirror(self):
        for n in (2, 3, 8, 9):
            y = Fraction(2, 3)
            plus = conjugate_pair_sum(n, y, 160)
            minus = conjugate_pair_sum(n, -y, 160)
            sign = 1 if n % 2 == 1 else -1
            with gmpy2.context(precision=224):
                assert minus.real == sign * plus.real
                assert minus.imag == sign * plus.imag

    @pytest.mark.parametrize("bad", [Fraction(0), Fraction(3, 2), Fraction(-5, 4)])
    def test_domain(self, bad):
        with pytest.raises(ValueError):
            conjugate_pair_sum(3, bad, 128)

    def test_target_known_value_n1(self):
        # target(1, 1/2) = Re(e^(-2i)(1 - i/2)) = cos 2 - sin(2)/2
        t = segment_target(1, Fraction(1, 2), 192)
        with gmpy2.context(precision=224):
            want = gmpy2.cos(mpfr(2)) - gmpy2.sin(mpfr(2)) / 2
            assert abs(t - want) < mpfr(2) ** -185

    @pytest.mark.parametrize("n", [1, 2, 7, 16, 45])
    def test_target_consistent_with_sum(self, n):
        prec = 192
        y = Fraction(3, 4)
        s = conjugate_pair_sum(n, y, prec)
        t = segment_target(n, y, prec)
        # S = 2i * target for even n, S = 2 * target for odd n
        component = s.imag if n % 2 == 0 else s.real
        with gmpy2.context(precision=prec):
            assert abs(component - 2 * t) < mpfr(2) ** (12 - prec) * max(abs(t), mpfr(1))

    def test_target_rejects_negative_y(self):
        with pytest.raises(ValueError):
            segment_target(3, Fraction(-1, 2), 128)
