"""
Tests for the numerics module.

Tests formal series composition, exact polynomial integration, the adaptive
trapezoidal rule and the exact-phase helpers.
"""

import math
from fractions import Fraction

import numpy as np
import pytest

from engine.errors import PreconditionError
from engine.numerics import (
    FormalSeries,
    RationalPoly,
    cos_pi,
    exp_i_pi,
    fps_cosh_sinh,
    fps_exp,
    poly_int_poly,
    principal_arg,
    reldiff,
    sin_pi,
    trapezoid_refine,
)
from tests.fixtures import SQRT_2PI


class TestFormalSeries:
    """Tests for exp, cosh and sinh of truncated power series."""

    def test_exp_of_zero(self):
        """Test that exp(0) is the unit series."""
        out = fps_exp(FormalSeries(np.zeros(4)))
        assert np.allclose(out.coeffs, [1, 0, 0, 0])

    def test_exp_of_v(self):
        """Test the scalar exponential coefficients."""
        out = fps_exp(FormalSeries.from_terms([0, 1], 3))
        assert np.allclose(out.coeffs, [1, 1, 0.5, 1.0 / 6.0], rtol=0, atol=1e-15)

    def test_exp_of_quadratic(self):
        """Test exp(v + 2 v^2) = 1 + v + 2.5 v^2 + ..."""
        out = fps_exp(FormalSeries.from_terms([0, 1, 2], 2))
        assert np.allclose(out.coeffs, [1, 1, 2.5], rtol=0, atol=1e-15)

    def test_exp_rejects_constant_term(self):
        """Test that a nonzero constant term is refused."""
        with pytest.raises(PreconditionError):
            fps_exp(FormalSeries.from_terms([1, 1], 2))

    def test_exp_inverse(self):
        """Test exp(s) exp(-s) == 1 for a complex series."""
        s = FormalSeries.from_terms([0, 0.3 + 0.1j, -0.2, 0.05j, 0.7], 6)
        product = fps_exp(s) * fps_exp(-s)
        assert np.allclose(product.coeffs, [1, 0, 0, 0, 0, 0, 0], rtol=0, atol=1e-14)

    def test_cosh_sinh_of_zero(self):
        """Test cosh(0) = 1 and sinh(0) = 0."""
        cosh, sinh = fps_cosh_sinh(FormalSeries(np.zeros(3)))
        assert np.allclose(cosh.coeffs, [1, 0, 0])
        assert np.allclose(sinh.coeffs, [0, 0, 0])

    def test_cosh_sinh_of_v(self):
        """Test the scalar cosh and sinh coefficients to order 4."""
        cosh, sinh = fps_cosh_sinh(FormalSeries.from_terms([0, 1], 4))
        assert np.allclose(cosh.coeffs, [1, 0, 0.5, 0, 1.0 / 24.0], rtol=0, atol=1e-15)
        assert np.allclose(sinh.coeffs, [0, 1, 0, 1.0 / 6.0, 0], rtol=0, atol=1e-15)

    def test_cosh_sinh_parity(self):
        """Test that an odd input gives an even cosh and an odd sinh."""
        odd = FormalSeries.from_terms([0, 1.5, 0, -0.25, 0, 0.125], 7)
        cosh, sinh = fps_cosh_sinh(odd)
        assert np.all(cosh.coeffs[1::2] == 0)
        assert np.all(sinh.coeffs[0::2] == 0)

    def test_batched_coefficients(self):
        """Test that a batch axis is carried through the composition."""
        a = np.array([1.0, 2.0, -0.5])
        out = fps_exp(FormalSeries.from_terms([0, a], 2))
        assert out.coeffs.shape == (3, 3)
        assert np.allclose(out.coeffs[2], 0.5 * a * a)

    def test_empty_series_rejected(self):
        """Test that a series needs at least one coefficient."""
        with pytest.raises(ValueError):
            FormalSeries(np.zeros(0))


class TestRationalPoly:
    """Tests for exact polynomial arithmetic and integration."""

    def test_strips_trailing_zeros(self):
        """Test normalization of the coefficient tuple."""
        p = RationalPoly((1, 2, 0, 0))
        assert p.coeffs == (Fraction(1), Fraction(2))
        assert p.degree == 1

    def test_product_is_exact(self):
        """Test (x - 1)(x + 1) = x^2 - 1."""
        p = RationalPoly((-1, 1)) * RationalPoly((1, 1))
        assert p.coeffs == (Fraction(-1), Fraction(0), Fraction(1))

    def test_parity(self):
        """Test the even and odd predicates."""
        assert RationalPoly((1, 0, 3)).is_even
        assert RationalPoly((0, Fraction(1, 3), 0, 2)).is_odd
        assert not RationalPoly((1, 1)).is_even

    def test_integral_of_one(self):
        """Test integral_0^beta 1 dp = beta."""
        assert poly_int_poly(RationalPoly((1,)), 0).coeffs == (Fraction(0), Fraction(1))

    def test_integral_from_one(self):
        """Test integral_1^beta 2p dp = beta^2 - 1."""
        out = poly_int_poly(RationalPoly((0, 2)), 1)
        assert out.coeffs == (Fraction(-1), Fraction(0), Fraction(1))

    def test_integral_of_square(self):
        """Test integral_0^beta (p^2 - 1)^2 dp = beta^5/5 - 2 beta^3/3 + beta."""
        square = RationalPoly((-1, 0, 1)) * RationalPoly((-1, 0, 1))
        out = poly_int_poly(square, 0)
        expected = (0, 1, 0, Fraction(-2, 3), 0, Fraction(1, 5))
        assert out.coeffs == tuple(Fraction(c) for c in expected)

    def test_integral_vanishes_at_lower_limit(self):
        """Test that the result is zero at the lower limit."""
        p = RationalPoly((Fraction(5, 7), -3, Fraction(1, 9)))
        assert poly_int_poly(p, 1)(Fraction(1)) == 0

    def test_exact_evaluation(self):
        """Test Horner evaluation on a Fraction argument."""
        p = RationalPoly((0, Fraction(-6, 24), 0, Fraction(5, 24)))
        assert p(Fraction(1)) == Fraction(-1, 24)

    def test_to_float(self):
        """Test conversion to float coefficients."""
        assert np.array_equal(RationalPoly((Fraction(1, 2), 3)).to_float(), [0.5, 3.0])


class TestTrapezoid:
    """Tests for the adaptive trapezoidal rule."""

    def test_gaussian(self):
        """Test integral of e^{-s^2/2} over [-15, 15]."""
        result = trapezoid_refine(lambda s: np.exp(-0.5 * s * s), -15.0, 15.0, 1e-16)
        assert abs(result.value - SQRT_2PI) <= 1e-14
        assert result.converged

    def test_gaussian_times_cosine(self):
        """Test the Fourier transform of the Gaussian at frequency 1."""
        result = trapezoid_refine(lambda s: np.exp(-0.5 * s * s) * np.cos(s), -15.0, 15.0, 1e-16)
        assert abs(result.value - SQRT_2PI * math.exp(-0.5)) <= 1e-13

    def test_constant(self):
        """Test that a constant integrates exactly."""
        result = trapezoid_refine(lambda s: np.ones_like(s), 0.0, 1.0, 1e-15)
        assert result.value == 1.0
        assert result.last_delta == 0.0
        assert result.levels_used == 0
        assert result.converged

    def test_complex_integrand(self):
        """Test that complex values come back as a complex scalar."""
        result = trapezoid_refine(
            lambda s: np.exp(-0.5 * s * s + 1j * s), -15.0, 15.0, 1e-16
        )
        assert isinstance(result.value, complex)
        assert abs(result.value - SQRT_2PI * math.exp(-0.5)) <= 1e-13

    def test_level_cap_is_reported(self):
        """Test that hitting the level cap is flagged, not raised."""
        result = trapezoid_refine(lambda s: np.sqrt(s), 0.0, 1.0, 1e-16, max_levels=3)
        assert not result.converged
        assert result.levels_used == 3
        assert len(result.deltas) == 3
        assert result.last_delta > 0.0

    def test_min_levels_respected(self):
        """Test that no level below min_levels is accepted."""
        result = trapezoid_refine(lambda s: np.ones_like(s), 0.0, 1.0, 1e-15, min_levels=4)
        assert result.levels_used == 4


class TestElementary:
    """Tests for exact-phase trigonometry and small helpers."""

    def test_sin_pi_exact_zeros(self):
        """Test that sin(pi n) is exactly zero."""
        for n in (-3, 0, 1, 7, 1000001):
            assert sin_pi(float(n)) == 0.0

    def test_cos_pi_exact_zeros(self):
        """Test that cos(pi (n + 1/2)) is exactly zero."""
        for n in (-3, 0, 5):
            assert cos_pi(n + 0.5) == 0.0

    def test_matches_math(self):
        """Test agreement with math.sin/cos for moderate arguments."""
        for x in (0.1, 0.37, 1.3, -2.71):
            assert sin_pi(x) == pytest.approx(math.sin(math.pi * x), abs=1e-15)
            assert cos_pi(x) == pytest.approx(math.cos(math.pi * x), abs=1e-15)

    def test_exp_i_pi(self):
        """Test exp(i pi x) at quarter turns."""
        assert exp_i_pi(1.0) == complex(-1.0, 0.0)
        assert exp_i_pi(0.5) == complex(0.0, 1.0)
        assert exp_i_pi(-0.5) == complex(0.0, -1.0)

    def test_reldiff(self):
        """Test the relative difference and its zero case."""
        assert reldiff(0, 0) == 0.0
        assert reldiff(1.0, 1.0) == 0.0
        assert reldiff(2.0, 1.0) == 0.5

    def test_principal_arg_on_negative_axis(self):
        """Test that both signed zeros on the negative axis give pi."""
        assert principal_arg(complex(-2.0, 0.0)) == math.pi
        assert principal_arg(complex(-2.0, -0.0)) == math.pi
        assert principal_arg(1j) == pytest.approx(0.5 * math.pi)
