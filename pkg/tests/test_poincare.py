"""
Tests for the large-|z| expansion and its remainder bound.
"""

import cmath
import math

import mpmath
import pytest

from engine.errors import DomainError
from engine.poincare import (
    coefficients,
    eta_hat,
    f_closed,
    leading_factor,
    remainder_bound,
    u_poincare,
)
from tests.fixtures import (
    BOUND_TERM1,
    BOUND_TERM2,
    mp_complex,
    rel,
    u_minus_half,
)


class TestExpansion:
    """Tests for U(a, z) from the asymptotic series in 1/z^2."""

    def test_gaussian_case_is_exact(self):
        """Test that a = -1/2 stops after the leading term."""
        z = 20.0 + 3.0j
        result = u_poincare(-0.5, z)
        assert result.terms_used == 1
        assert result.converged
        assert rel(result.value, u_minus_half(z)) <= 1e-14

    @pytest.mark.parametrize(
        "a, z",
        [
            (0.0, 20.0),
            (5.0, 15.0 + 10.0j),
            (-10.0, 25.0j),
            (10.0, 14.0 + 3.0j),
            (-30.0, 18.0 + 12.0j),
        ],
    )
    def test_against_mpmath(self, a, z):
        """Test agreement with mpmath outside |z| = 12 + |a|/6."""
        result = u_poincare(a, z)
        assert result.converged
        assert result.terms_used <= 50
        assert rel(result.value, mp_complex(mpmath.pcfu, a, z)) <= 1e-13

    def test_single_term(self):
        """Test that n_terms = 1 gives the leading factor."""
        z = 13.0 + 2.0j
        assert u_poincare(3.0, z, n_terms=1).value == leading_factor(3.0, z)

    def test_three_terms(self):
        """Test the explicit three-term sum."""
        a, z = 2.0, 12.0 + 1.0j
        alpha = a + 0.5
        x = 1.0 / (2.0 * z * z)
        second = alpha * (alpha + 1) * (alpha + 2) * (alpha + 3) * x * x / 2.0
        series = 1.0 - alpha * (alpha + 1) * x + second
        result = u_poincare(a, z, n_terms=3)
        assert result.terms_used == 3
        assert rel(result.value, leading_factor(a, z) * series) <= 1e-15

    def test_leading_factor(self):
        """Test z^{-a-1/2} e^{-z^2/4} on the real axis."""
        assert leading_factor(1.5, 16.0) == pytest.approx(16.0**-2 * math.exp(-64.0), rel=1e-13)

    def test_zero_argument(self):
        """Test that z = 0 is refused."""
        with pytest.raises(DomainError):
            u_poincare(1.0, 0.0)

    @pytest.mark.parametrize("n", [0, 51])
    def test_term_count_range(self, n):
        """Test that n_terms must lie in 1..50."""
        with pytest.raises(DomainError):
            u_poincare(1.0, 20.0, n_terms=n)

    def test_term_cap_reported(self):
        """Test that a series still far from convergence is flagged."""
        result = u_poincare(40.0, 3.0)
        assert not result.converged
        assert result.terms_used == 50


class TestRemainderBound:
    """Tests for the bound on the expansion's remainder."""

    def test_reference_point(self):
        """Test both parts of the bound at a = 10, |z| = 12, n = 35."""
        bound = remainder_bound(10.0, 12.0, 35)
        assert bound.term1 == pytest.approx(BOUND_TERM1, rel=0.01)
        assert bound.term2 == pytest.approx(BOUND_TERM2, rel=0.01)
        assert bound.total == bound.term1 + bound.term2
        # the quoted total, 6.24e-14, is below the sum of its own two parts
        assert bound.total == pytest.approx(BOUND_TERM1 + BOUND_TERM2, rel=0.01)

    def test_nonnegative(self):
        """Test that both parts are non-negative across the box."""
        for a, absz, n in [(0.0, 12.0, 10), (0.5, 20.0, 30), (3.7, 15.0, 50), (10.0, 40.0, 1)]:
            bound = remainder_bound(a, absz, n)
            assert bound.term1 >= 0.0
            assert bound.term2 >= 0.0

    def test_decreasing_in_abs_z(self):
        """Test that term1 decreases as |z| grows."""
        values = [remainder_bound(5.0, r, 20).term1 for r in (12.0, 14.0, 18.0, 25.0)]
        assert values == sorted(values, reverse=True)
        assert values[0] > values[-1]

    @pytest.mark.parametrize(
        "a, z",
        [(10.0, 12.0j), (4.0, 12.0 + 5.0j), (7.5, 13.0 * cmath.exp(0.8j)), (0.0, 12.0)],
    )
    def test_bound_holds(self, a, z):
        """Test that the measured remainder stays under the bound."""
        n = 35
        approx = u_poincare(a, z, n_terms=n).value
        exact = mp_complex(mpmath.pcfu, a, z)
        measured = abs(approx - exact) / abs(leading_factor(a, z))
        assert measured <= remainder_bound(a, abs(z), n).total + 5e-13

    @pytest.mark.parametrize(
        "a, absz, n",
        [(-0.1, 12.0, 10), (10.5, 12.0, 10), (5.0, 11.9, 10), (5.0, 12.0, 0), (5.0, 12.0, 51)],
    )
    def test_outside_box(self, a, absz, n):
        """Test that the bound is only offered inside its parameter box."""
        with pytest.raises(DomainError):
            remainder_bound(a, absz, n)

    def test_coefficients(self):
        """Test c_0 = 1 and c_1 = a + 3/2."""
        assert coefficients(1.5, 2) == [1.0, 3.0]
        assert coefficients(4.0, 1) == [1.0]

    def test_closed_form_matches_series(self):
        """Test f(a, -t) = sum_k c_k (t/2)^k for small t."""
        a, t = 3.0, 0.01
        series = math.fsum(c * (0.5 * t) ** k for k, c in enumerate(coefficients(a, 30)))
        assert f_closed(a, -t) == pytest.approx(series, rel=1e-14)
        assert f_closed(a, 0.0) == 1.0

    def test_eta_hat_positive(self):
        """Test that the normalized tail is positive and of order one."""
        value = eta_hat(10.0, 35)
        assert 0.0 < value < 100.0
