"""
Validation module for pcfu.

Recurrence residuals, seeded sweeps and cross-method agreement maps.
"""

from engine.validate.agreement import ERROR_TAG, method_agreement_map, recurrence_map
from engine.validate.recurrence import (
    ResidualSample,
    default_evaluator,
    recurrence_residual,
    recurrence_sample,
)
from engine.validate.sweep import FRAC_THRESHOLD, QUANTILES, run_sweep, sample_points

__all__ = [
    "recurrence_residual",
    "recurrence_sample",
    "ResidualSample",
    "default_evaluator",
    "run_sweep",
    "sample_points",
    "QUANTILES",
    "FRAC_THRESHOLD",
    "method_agreement_map",
    "recurrence_map",
    "ERROR_TAG",
]
