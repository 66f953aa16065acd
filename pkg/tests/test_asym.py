"""Asymptotic approximations: regime guards, frozen convergence spot
checks, and the algebraic chain from the half-phase integral
approximants to the segment and corner formulas."""

from fractions import Fraction

import gmpy2
import pytest
from gmpy2 import mpfr

from hyp3f1.arith import BigComplex, GaussianRational
from hyp3f1.asym import (
    RegimeError,
    endpoint_approx,
    exterior_approx,
    interior_approx,
    oscillation_phase,
    phase_data,
    phase_minus,
    phase_plus,
    segment_approx,
    stationary_phase_minus,
    stationary_phase_minus_endpoint,
)
from hyp3f1.geometry import RegimeTag
from hyp3f1.hyper import PolyParams, family_exact, segment_target

Z_OUT = GaussianRational(3, 0)
Z_IN = GaussianRational(1, 0)


class TestRegimeGuards:
    def test_exterior_rejects_interior_point(self):
        with pytest.raises(RegimeError):
            exterior_approx(PolyParams(10, 1), Z_IN, 128)

    def test_interior_rejects_exterior_point(self):
        with pytest.raises(RegimeError):
            interior_approx(PolyParams(10, 1), Z_OUT, 128)

    def test_interior_rejects_segment_point(self):
        with pytest.raises(RegimeError):
            interior_approx(PolyParams(10, 1), GaussianRational(0, Fraction(1, 2)), 128)

    def test_segment_domain(self):
        with pytest.raises(ValueError):
            segment_approx(10, Fraction(1), 128)
        with pytest.raises(ValueError):
            segment_approx(10, Fraction(3, 2), 128)
        with pytest.raises(ValueError):
            segment_approx(0, Fraction(1, 2), 128)


class TestExterior:
    def test_convergence_spot_checks(self):
        for n, bound in ((50, 2e-3), (200, 5e-4)):
            exact = family_exact(PolyParams(n, 1), Z_OUT).to_bigcomplex(256)
            approx = exterior_approx(PolyParams(n, 1), Z_OUT, 256).value
            with gmpy2.context(precision=256):
                assert abs(exact / approx - 1) < bound

    def test_growth_rate_matches_modulus(self):
        from hyp3f1.geometry import growth_factor
        n = 120
        a1 = exterior_approx(PolyParams(n, 1), Z_OUT, 192).value
        a2 = exterior_approx(PolyParams(n + 1, 1), Z_OUT, 192).value
        phi = abs(growth_factor(Z_OUT, 192))
        with gmpy2.context(precision=192):
            assert abs(abs(a2 / a1) / phi - 1) < 0.02

    def test_alpha_two(self):
        n = 150
        exact = family_exact(PolyParams(n, 2), Z_OUT).to_bigcomplex(256)
        approx = exterior_approx(PolyParams(n, 2), Z_OUT, 256).value
        with gmpy2.context(precision=256):
            assert abs(exact / approx - 1) < 0.02

    def test_metadata(self):
        r = exterior_approx(PolyParams(10, 2), Z_OUT, 128)
        assert r.regime is RegimeTag.EXTERIOR
        assert r.leading_order == Fraction(3, 2)

    def test_complex_point(self):
        z = GaussianRational(2, 2)
        n = 80
        exact = family_exact(PolyParams(n, 1), z).to_bigcomplex(256)
        approx = exterior_approx(PolyParams(n, 1), z, 256).value
        with gmpy2.context(precision=256):
            assert abs(exact / approx - 1) < 0.02


class TestInterior:
    def test_alpha_one_closed_form(self):
        # (2/n) * Gamma(3/2)/sqrt(pi) * (-1/1) = -1/n
        for n in (10, 100, 1000):
            v = interior_approx(PolyParams(n, 1), Z_IN, 160).value
            with gmpy2.context(precision=160):
                assert abs(v.real + mpfr(1) / n) < mpfr(2) ** -150
                assert v.imag == 0

    def test_convergence(self):
        for alpha, bound in ((1, 0.04), (2, 0.12)):
            n = 100
            exact = family_exact(PolyParams(n, alpha), Z_IN).to_bigcomplex(256)
            approx = interior_approx(PolyParams(n, alpha), Z_IN, 256).value
            with gmpy2.context(precision=256):
                assert abs(exact / approx - 1) < bound

    def test_metadata(self):
        r = interior_approx(PolyParams(10, 2), Z_IN, 128)
        assert r.regime is RegimeTag.INTERIOR
        assert r.leading_order == Fraction(-2)

    def test_complex_interior_point(self):
        z = GaussianRational(Fraction(1, 2), Fraction(1, 2))
        n = 200
        exact = family_exact(PolyParams(n, 1), z).to_bigcomplex(256)
        approx = interior_approx(PolyParams(n, 1), z, 256).value
        with gmpy2.context(precision=256):
            assert abs(exact / approx - 1) < 0.05


class TestSegment:
    def test_phase_increment(self):
        # A(n+1) - A(n) = sqrt(1-y^2)/y + asin(y)
        y = Fraction(1, 2)
        prec = 192
        a1 = oscillation_phase(7, y, prec)
        a2 = oscillation_phase(8, y, prec)
        with gmpy2.context(precision=prec):
            want = gmpy2.sqrt(mpfr(3)) + gmpy2.asin(mpfr(1) / 2)
            assert abs((a2 - a1) - want) < mpfr(2) ** -180

    def test_convergence_and_sign(self):
        # ratio exact/approx tends to +1; the overall minus sign in the
        # approximation is load bearing
        for n, bound in ((100, 0.05), (300, 0.01)):
            exact = segment_target(n, Fraction(1, 2), 192)
            approx = segment_approx(n, Fraction(1, 2), 192).value
            with gmpy2.context(precision=192):
                ratio = exact / approx
                assert abs(ratio - 1) < bound

    def test_metadata(self):
        r = segment_approx(10, Fraction(1, 2), 128)
        assert r.regime is RegimeTag.SEGMENT_INTERIOR
        assert r.leading_order == Fraction(1, 2)


class TestEndpoint:
    def test_scaling_is_two_thirds_power(self):
        v1 = endpoint_approx(100, 192).value
        v2 = endpoint_approx(800, 192).value
        with gmpy2.context(precision=192):
            assert abs(abs(v2 / v1) - 4) < mpfr(2) ** -180

    def test_sign_period_four(self):
        with gmpy2.context(precision=128):
            for n in (10, 11, 40, 41):
                a = endpoint_approx(n, 128).value
                b = endpoint_approx(n + 2, 128).value
                c = endpoint_approx(n + 4, 128).value
                assert a * b < 0
                assert a * c > 0

    def test_convergence(self):
        exact = segment_target(500, Fraction(1), 256)
        approx = endpoint_approx(500, 256).value
        with gmpy2.context(precision=256):
            assert abs(exact / approx - 1) < 0.01

    def test_metadata(self):
        r = endpoint_approx(10, 128)
        assert r.regime is RegimeTag.SEGMENT_ENDPOINT
        assert r.leading_order == Fraction(2, 3)


class TestPhases:
    def test_phase_values(self):
        y = Fraction(1, 2)
        prec = 160
        with gmpy2.context(precision=prec):
            theta = gmpy2.const_pi() / 3
            pm = phase_minus(theta, y, prec)
            pp = phase_plus(theta, y, prec)
            # -cos(pi/3)/y = -1 for y = 1/2
            assert abs(pm - (-1 - theta)) < mpfr(2) ** -150
            assert abs(pp - (-1 + theta)) < mpfr(2) ** -150

    def test_fast_phase_strictly_increasing(self):
        y = Fraction(1, 4)
        prec = 128
        with gmpy2.context(precision=prec):
            grid = [gmpy2.const_pi() * k / 200 for k in range(201)]
            vals = [phase_plus(t, y, prec) for t in grid]
            gaps = [b - a for a, b in zip(vals, vals[1:])]
            step = gmpy2.const_pi() / 200
            # derivative (sin t + y)/y >= 1 everywhere on [0, pi]
            assert all(g > step * mpfr("0.99") for g in gaps)

    def test_two_stationary_points(self):
        data = phase_data(Fraction(1, 2), 192)
        assert not data.coalesced
        assert data.third_derivative is None
        with gmpy2.context(precision=192):
            sixth_pi = gmpy2.const_pi() / 6
            assert abs(data.stationary_points[0] - sixth_pi) < mpfr(2) ** -180
            assert abs(data.stationary_points[1] - 5 * sixth_pi) < mpfr(2) ** -180
            root3 = gmpy2.sqrt(mpfr(3))
            assert abs(data.second_derivatives[0] - root3) < mpfr(2) ** -180
            assert abs(data.second_derivatives[1] + root3) < mpfr(2) ** -180
            total = data.phase_values[0] + data.phase_values[1]
            assert abs(total + gmpy2.const_pi()) < mpfr(2) ** -180

    def test_finite_difference_stationarity(self):
        prec = 192
        for y in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
            data = phase_data(y, prec)
            with gmpy2.context(precision=prec):
                h = mpfr(2) ** -40
                for theta, curv in zip(data.stationary_points,
                                       data.second_derivatives):
                    up = phase_minus(theta + h, y, prec)
                    dn = phase_minus(theta - h, y, prec)
                    mid = phase_minus(theta, y, prec)
                    slope = (up - dn) / (2 * h)
                    second = (up - 2 * mid + dn) / (h * h)
                    assert abs(slope) < mpfr(2) ** -75
                    assert abs(second - curv) < mpfr(2) ** -30

    def test_coalesced_at_corner(self):
        data = phase_data(Fraction(1), 160)
        assert data.coalesced
        with gmpy2.context(precision=160):
            half_pi = gmpy2.const_pi() / 2
            assert abs(data.stationary_points[0] - half_pi) < mpfr(2) ** -150
            assert abs(data.phase_values[0] + half_pi) < mpfr(2) ** -150
            assert data.second_derivatives[0] == 0
            assert data.third_derivative == -1

    def test_domain(self):
        with pytest.raises(ValueError):
            phase_data(Fraction(0), 128)
        with pytest.raises(ValueError):
            phase_data(Fraction(3, 2), 128)


class TestStationaryPhaseChain:
    def test_parity_structure(self):
        y = Fraction(1, 2)
        even = stationary_phase_minus(12, y, 160)
        odd = stationary_phase_minus(13, y, 160)
        assert even.imag == 0
        assert odd.real == 0

    @pytest.mark.parametrize("n", [20, 21, 50, 51])
    def test_segment_formula_follows_from_integral_formula(self, n):
        # target ~ -(n/(4y)) Re(I-approx) for even n,
        #          +(n/(4y)) Im(I-approx) for odd n
        y = Fraction(1, 2)
        prec = 192
        sp = stationary_phase_minus(n, y, prec)
        seg = segment_approx(n, y, prec).value
        with gmpy2.context(precision=prec):
            factor = mpfr(n) / (4 * mpfr(1) / 2)
            derived = -factor * sp.real if n % 2 == 0 else factor * sp.imag
            assert abs(derived - seg) < mpfr(2) ** (40 - prec) * max(abs(seg), mpfr(1))

    @pytest.mark.parametrize("n", [30, 31, 44, 45])
    def test_endpoint_formula_follows_from_integral_formula(self, n):
        prec = 192
        sp = stationary_phase_minus_endpoint(n, prec)
        end = endpoint_approx(n, prec).value
        with gmpy2.context(precision=prec):
            factor = mpfr(n) / 4
            derived = -factor * sp.real if n % 2 == 0 else factor * sp.imag
            assert abs(derived - end) < mpfr(2) ** (40 - prec) * max(abs(end), mpfr(1))

    def test_endpoint_integral_direction(self):
        # (-i)^n walks the four axes as n increases
        vals = [stationary_phase_minus_endpoint(n, 128) for n in (4, 5, 6, 7)]
        assert vals[0].real > 0 and vals[0].imag == 0
        assert vals[1].real == 0 and vals[1].imag < 0
        assert vals[2].real < 0 and vals[2].imag == 0
        assert vals[3].real == 0 and vals[3].imag > 0
