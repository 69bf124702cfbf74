"""
Tests for the validation tools.

Tests the recurrence residual, the seeded sweep and the grid maps. Sweep
structure is checked with cheap stand-in evaluators; accuracy with u_pcf.
"""

import math

import numpy as np
import pytest

from engine.errors import DomainError, NonConvergenceError
from engine.models import (
    EvalFlag,
    EvalResult,
    GridSpec,
    MethodTag,
    SweepConfig,
    SweepDomain,
)
from engine.validate import (
    ERROR_TAG,
    method_agreement_map,
    recurrence_map,
    recurrence_residual,
    recurrence_sample,
    run_sweep,
    sample_points,
)
from tests.fixtures import RECURRENCE_LIMIT


def smooth_evaluator(a, z):
    """Deterministic stand-in that does not satisfy the recurrence."""
    return EvalResult(complex(math.exp(-0.1 * a)) * (1.0 + 0.01 * z), MethodTag.INTEGRAL, 0.0)


def flagged_evaluator(a, z):
    """Stand-in whose every value is marked near a zero."""
    return EvalResult(1.0 + 0.0j, MethodTag.CONNECTION, 0.0, frozenset({EvalFlag.NEAR_ZERO_OF_U}))


def failing_evaluator(a, z):
    """Stand-in that refuses positive orders."""
    if a > 0.0:
        raise DomainError(f"refused a={a}")
    return smooth_evaluator(a, z)


class TestRecurrence:
    """Tests for the normalized three-term residual."""

    @pytest.mark.parametrize(
        "a, z",
        [
            (2.5, 2.0 + 1.0j),
            (-8.0, 6.0 + 3.0j),
            (0.0, 25.0),
            (-40.0, 4.0 + 2.0j),
            (30.0, 5.0j),
            (1.2, -3.0 + 2.0j),
            (-0.5, 2.0),
            (10.0, 0.5 + 0.5j),
        ],
    )
    def test_residual_small(self, a, z):
        """Test that u_pcf satisfies the recurrence to the stated level."""
        assert recurrence_residual(a, z) <= RECURRENCE_LIMIT

    def test_sample_contents(self):
        """Test that a sample keeps the three evaluations in order."""
        sample = recurrence_sample(2.5, 2.0 + 1.0j)
        assert sample.method == "maclaurin"
        assert len(sample.results) == 3
        assert sample.flags == frozenset()

    def test_gaussian_exact(self):
        """Test the recurrence with the exact values at a = -3/2, -1/2, 1/2."""

        def exact(a, z):
            # U(-3/2) = z e^{-z^2/4}, U(-1/2) = e^{-z^2/4}; the a + 1/2 = 0 term drops out
            gauss = math.exp(-0.25 * z.real**2)
            value = {-1.5: z.real * gauss, -0.5: gauss}.get(a, 7.0)
            return EvalResult(complex(value), MethodTag.MACLAURIN, 0.0)

        assert recurrence_residual(-0.5, 1.3, exact) <= 1e-16

    def test_failure_names_point(self):
        """Test that a failed evaluation is reported with its point."""
        with pytest.raises(NonConvergenceError, match="a=1.0"):
            recurrence_sample(1.0, 2.0, failing_evaluator)


class TestSampling:
    """Tests for the seeded sample points."""

    def test_deterministic(self):
        """Test that a seed fixes the points."""
        cfg = SweepConfig(n_samples=50, seed=7)
        a1, z1 = sample_points(cfg)
        a2, z2 = sample_points(cfg)
        assert np.array_equal(a1, a2)
        assert np.array_equal(z1, z2)

    def test_seed_changes_points(self):
        """Test that different seeds give different points."""
        a1, _ = sample_points(SweepConfig(n_samples=20, seed=1))
        a2, _ = sample_points(SweepConfig(n_samples=20, seed=2))
        assert not np.array_equal(a1, a2)

    def test_principal_ranges(self):
        """Test the ranges of a, |z| and arg z in the principal domain."""
        cfg = SweepConfig(n_samples=500, seed=3, a_range=(-5.0, 5.0), z_abs_range=(1.0, 4.0))
        a, z = sample_points(cfg)
        assert a.shape == (500,)
        assert np.all((a >= -5.0) & (a <= 5.0))
        assert np.all((np.abs(z) >= 1.0 - 1e-12) & (np.abs(z) <= 4.0 + 1e-12))
        angles = np.angle(z)
        assert np.all((angles >= -1e-15) & (angles <= 0.5 * math.pi + 1e-12))

    def test_full_domain_reaches_lower_half_plane(self):
        """Test that the full domain samples every quadrant."""
        cfg = SweepConfig(n_samples=500, seed=3, domain=SweepDomain.FULL)
        _, z = sample_points(cfg)
        assert np.any(z.imag < 0.0)
        assert np.any(z.real < 0.0)

    @pytest.mark.parametrize(
        "kwargs",
        [{"n_samples": 0}, {"a_range": (1.0, -1.0)}, {"z_abs_range": (-1.0, 2.0)}],
    )
    def test_config_validation(self, kwargs):
        """Test that malformed sweep settings are refused."""
        with pytest.raises(DomainError):
            SweepConfig(**kwargs)


class TestSweep:
    """Tests for run_sweep."""

    def test_identical_reports(self):
        """Test that the same config yields the same report."""
        cfg = SweepConfig(n_samples=40, seed=11, worst_k=5)
        first = run_sweep(cfg, smooth_evaluator)
        second = run_sweep(cfg, smooth_evaluator)
        assert first.max_residual == second.max_residual
        assert first.quantiles == second.quantiles
        assert first.worst_points == second.worst_points

    def test_single_sample_reproducible(self):
        """Test that a one-point sweep through u_pcf repeats bit for bit."""
        cfg = SweepConfig(n_samples=1, seed=2024)
        first = run_sweep(cfg)
        second = run_sweep(cfg)
        assert first.max_residual == second.max_residual
        assert first.worst_points == second.worst_points
        assert first.failures == second.failures

    def test_worst_points_ordered(self):
        """Test that worst points are sorted and capped at worst_k."""
        cfg = SweepConfig(n_samples=40, seed=11, worst_k=5)
        report = run_sweep(cfg, smooth_evaluator)
        residuals = [point.residual for point in report.worst_points]
        assert len(residuals) == 5
        assert residuals == sorted(residuals, reverse=True)
        assert residuals[0] == report.max_residual
        assert set(report.quantiles) == {50.0, 99.0, 99.9}
        assert report.method_counts == {"integral": 40}

    def test_progress_callback(self):
        """Test that progress is reported once per point."""
        seen = []
        run_sweep(SweepConfig(n_samples=12, seed=0), smooth_evaluator, seen.append)
        assert seen == list(range(1, 13))

    def test_flagged_points_kept_apart(self):
        """Test that NEAR_ZERO_OF_U points stay out of the statistics."""
        report = run_sweep(SweepConfig(n_samples=10, seed=0), flagged_evaluator)
        assert len(report.flagged_points) == 10
        assert report.max_residual == 0.0
        assert report.quantiles == {}
        assert report.worst_points == []

    def test_failures_recorded(self):
        """Test that failing points are collected instead of raised."""
        cfg = SweepConfig(n_samples=30, seed=5, a_range=(-10.0, 10.0))
        report = run_sweep(cfg, failing_evaluator)
        assert report.failures
        assert not report.passed()
        assert all(a + 1.0 > 0.0 for a, _, _ in report.failures)

    def test_small_sweep_passes(self):
        """Test a seeded sweep of u_pcf over the principal domain."""
        report = run_sweep(SweepConfig(n_samples=40, seed=42))
        assert report.passed(RECURRENCE_LIMIT)
        assert sum(report.method_counts.values()) + len(report.failures) == 40

    def test_worst_point_fields_are_builtin(self):
        """Test that worst points carry plain floats and complexes, not numpy scalars."""
        report = run_sweep(SweepConfig(n_samples=5, seed=11, worst_k=2), smooth_evaluator)
        for point in report.worst_points:
            assert type(point.residual) is float
            assert type(point.a) is float
            assert type(point.z) is complex

    def test_medium_sweep_passes(self):
        """Test a 500-point sweep with the reference seed."""
        report = run_sweep(SweepConfig(n_samples=500, seed=42))
        assert not report.failures
        assert report.max_residual <= RECURRENCE_LIMIT

    @pytest.mark.slow
    def test_reference_sweep_passes(self):
        """Test the full 10^4-point sweep with seed 42."""
        report = run_sweep(SweepConfig(n_samples=10_000, seed=42))
        assert not report.failures
        assert report.max_residual <= RECURRENCE_LIMIT


class TestGridMaps:
    """Tests for the agreement and recurrence maps."""

    def test_same_method_agrees_exactly(self):
        """Test that comparing a method with itself gives zero."""
        grid = GridSpec(0.0, 2.0, 3, 0.5, 2.5, 3)
        rows = list(method_agreement_map(grid, MethodTag.MACLAURIN, MethodTag.MACLAURIN))
        assert len(rows) == grid.size
        assert all(row.reldiff == 0.0 for row in rows)

    def test_series_against_integral(self):
        """Test Maclaurin and integral agreement on a small grid."""
        grid = GridSpec(-3.0, 3.0, 3, 0.5, 2.5, 3, arg=0.4)
        rows = list(method_agreement_map(grid, MethodTag.MACLAURIN, MethodTag.INTEGRAL))
        assert max(row.reldiff for row in rows) <= 1e-12
        assert {(row.tag1, row.tag2) for row in rows} == {("maclaurin", "integral")}

    def test_refused_method_marked(self):
        """Test that a method refusing a point yields nan and the error tag."""
        grid = GridSpec(0.0, 0.0, 1, 1.0, 1.0, 1)
        (row,) = method_agreement_map(grid, MethodTag.AIRY, MethodTag.INTEGRAL)
        assert math.isnan(row.reldiff)
        assert row.tag1 == ERROR_TAG
        assert row.tag2 == "integral"

    def test_recurrence_map(self):
        """Test one residual row per grid point, a varying slowest."""
        grid = GridSpec.parse("0,1,2:1,2,2", arg=0.3)
        rows = list(recurrence_map(grid))
        assert len(rows) == grid.size
        assert [row[0] for row in rows] == [0.0, 0.0, 1.0, 1.0]
        samples = [sample for _, _, sample, _ in rows]
        assert all(s is not None and s.residual <= RECURRENCE_LIMIT for s in samples)

    def test_recurrence_map_failure(self):
        """Test that a point whose neighbour order is out of range is reported."""
        (row,) = recurrence_map(GridSpec.parse("60,60,1:1,1,1"))
        assert row[2] is None
        assert "a=60.0" in row[3]
