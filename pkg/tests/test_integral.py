"""
Tests for the integral representation.

Tests saddle-point data, path selection and the quadrature value of U(a,z)
in the right half plane.
"""

import math

import mpmath
import pytest

from engine.errors import DomainError, SingularRegionError
from engine.integral import PathKind, PathSpec, saddle, select_path, u_integral
from engine.integral.saddle import SHIFT_TRIGGER, path_peak
from tests.fixtures import U_HALF_AT_1, U_MINUS_HALF_AT_1, mp_complex, rel, u_minus_half


class TestSaddle:
    """Tests for the saddle point t0 and its prefactor."""

    def test_quadratic_root(self):
        """Test t0 = (2 + sqrt 6) / 2 at a = 0, z = 2."""
        assert saddle(0.0, 2.0).t0 == pytest.approx((2.0 + math.sqrt(6.0)) / 2.0, rel=1e-15)

    def test_alpha_zero(self):
        """Test that t0 = z when a = -1/2."""
        data = saddle(-0.5, 3.0)
        assert data.t0 == pytest.approx(3.0, rel=1e-15)
        assert data.alpha == 0.0

    @pytest.mark.parametrize("a, z", [(2.5, 1.0 + 3.0j), (-7.2, 4.0 + 0.5j), (15.0, 0.2j)])
    def test_saddle_equation(self, a, z):
        """Test t0^2 - z t0 - alpha = 0."""
        data = saddle(a, z)
        residual = data.t0**2 - z * data.t0 - data.alpha
        assert abs(residual) <= 1e-13 * max(abs(data.t0) ** 2, 1.0)

    def test_degenerate_saddle(self):
        """Test that a = -1/2, z = 0 is refused."""
        with pytest.raises(SingularRegionError):
            saddle(-0.5, 0.0)


class TestPathSelection:
    """Tests for the choice between the direct and the shifted path."""

    def test_direct_path(self):
        """Test that a real saddle far from zero keeps the direct path."""
        spec = select_path(10.0, 3.0)
        assert spec.kind is PathKind.DIRECT
        assert spec.delta == 0.0

    def test_shifted_path(self):
        """Test that an imaginary saddle triggers the shifted path."""
        spec = select_path(1.5, 5.0j)
        assert spec.kind is PathKind.SHIFTED
        assert spec.delta == 1.0

    def test_quadrature_tolerance(self):
        """Test that the quadrature gets a tenth of the tolerance."""
        spec = select_path(0.0, 1.0, tol=1e-14)
        assert spec.tol == pytest.approx(1e-15)
        assert spec.truncation == 15.0

    def test_deterministic(self):
        """Test that the same input always yields the same path."""
        assert select_path(-5.0, 0.05 + 6.0j) == select_path(-5.0, 0.05 + 6.0j)

    @pytest.mark.parametrize("a", [17.144, 17.446])
    def test_saddle_near_imaginary_axis_shifts(self, a):
        """Test that Re t0 just above the trigger still shifts when alpha log t dominates."""
        data = saddle(a, 0.0613 + 9.213j)
        assert data.t0.real > SHIFT_TRIGGER
        assert path_peak(data, 0.0) > 20.0
        assert path_peak(data, 1.0) < 1.0
        assert select_path(a, 0.0613 + 9.213j).kind is PathKind.SHIFTED

    def test_real_saddle_peaks_at_saddle(self):
        """Test that the direct path through a real saddle peaks at the saddle itself."""
        data = saddle(10.0, 3.0)
        assert path_peak(data, 0.0) == pytest.approx(0.0, abs=1e-14)
        assert path_peak(data, 1.0) > 0.0


class TestIntegralValue:
    """Tests for U(a, z) from the trapezoidal rule."""

    def test_gaussian_case(self):
        """Test U(-1/2, 1) = e^{-1/4}."""
        result = u_integral(-0.5, 1.0)
        assert rel(result.value, U_MINUS_HALF_AT_1) <= 1e-14
        assert result.converged

    def test_erfc_case(self):
        """Test U(1/2, 1) against its erfc form."""
        assert rel(u_integral(0.5, 1.0).value, U_HALF_AT_1) <= 1e-13

    def test_gaussian_on_imaginary_axis(self):
        """Test U(-1/2, 4i) = e^{4}."""
        assert rel(u_integral(-0.5, 4.0j).value, u_minus_half(4.0j)) <= 1e-13

    @pytest.mark.parametrize(
        "a, z",
        [
            (3.7, 2.0 + 1.0j),
            (-8.2, 4.0 + 2.0j),
            (15.0, 2.0),
            (-15.0, 5.0 + 5.0j),
            (1.5, 5.0j),
            (19.5, 0.3 + 9.0j),
            (-19.0, 12.0),
        ],
    )
    def test_against_mpmath(self, a, z):
        """Test agreement with mpmath across the integral's region."""
        value = u_integral(a, z).value
        assert rel(value, mp_complex(mpmath.pcfu, a, z)) <= 1e-12

    @pytest.mark.parametrize("a", [15.144, 16.144, 17.144, 17.446, 19.8])
    def test_near_imaginary_axis_against_mpmath(self, a):
        """Test points whose saddle sits just right of the imaginary axis."""
        z = 0.0613 + 9.213j
        result = u_integral(a, z)
        assert result.converged
        assert rel(result.value, mp_complex(mpmath.pcfu, a, z)) <= 5e-13

    @pytest.mark.parametrize("a, z", [(12.0, 0.2 + 7.5j), (8.0, 0.4 + 6.0j), (19.0, 0.05 + 10.5j)])
    def test_either_path_when_both_are_clean(self, a, z):
        """Test that the selected path matches mpmath close to the imaginary axis."""
        assert rel(u_integral(a, z).value, mp_complex(mpmath.pcfu, a, z)) <= 5e-13

    def test_shifted_path_agrees(self):
        """Test that moving the path does not change the value."""
        direct = u_integral(2.0, 3.0 + 1.0j)
        shifted = u_integral(2.0, 3.0 + 1.0j, path=PathSpec(PathKind.SHIFTED, 1.0))
        assert direct.path.kind is PathKind.DIRECT
        assert rel(shifted.value, direct.value) <= 1e-13

    def test_left_half_plane_refused(self):
        """Test that Re z < 0 is outside the representation."""
        with pytest.raises(DomainError):
            u_integral(1.0, -0.5 + 1.0j)

    def test_degenerate_saddle_raises(self):
        """Test that the degenerate saddle is reported to the caller."""
        with pytest.raises(SingularRegionError):
            u_integral(-0.5, 0.0)
