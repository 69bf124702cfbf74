"""
Seeded Recurrence Sweep

Samples (a, z) uniformly in a, |z| and arg z, computes the recurrence residual
at every point and summarizes the distribution.

Design Decisions:
    - numpy's PCG64 seeded through SeedSequence; a, |z| and arg are drawn as
      three whole arrays in that order, so a report depends only on the config
    - Points flagged NEAR_ZERO_OF_U are reported apart from the statistics
    - Evaluation failures are recorded, never raised

Academic Context:
    Input: SweepConfig
    Transformation: Random sampling, three evaluations per point, quantiles
    Output: SweepReport
    Limitation: Serial; a 10^6-point sweep takes hours
"""

import heapq
import logging
import math
from typing import Callable, Optional

import numpy as np

from engine.errors import PCFError
from engine.models import (
    EvalFlag,
    EvalOptions,
    SweepConfig,
    SweepDomain,
    SweepReport,
    WorstPoint,
)
from engine.validate.recurrence import (
    Evaluator,
    ResidualSample,
    default_evaluator,
    recurrence_sample,
)

logger = logging.getLogger(__name__)

QUANTILES = (50.0, 99.0, 99.9)
FRAC_THRESHOLD = 5e-14


def sample_points(cfg: SweepConfig) -> tuple[np.ndarray, np.ndarray]:
    """Orders a and arguments z drawn for the sweep, in sample order."""
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(cfg.seed)))
    a = rng.uniform(cfg.a_range[0], cfg.a_range[1], cfg.n_samples)
    r = rng.uniform(cfg.z_abs_range[0], cfg.z_abs_range[1], cfg.n_samples)
    if cfg.domain is SweepDomain.PRINCIPAL:
        theta = rng.uniform(0.0, 0.5 * math.pi, cfg.n_samples)
    else:
        # uniform on [0, 2 pi) mapped to (-pi, pi]
        theta = math.pi - rng.uniform(0.0, 2.0 * math.pi, cfg.n_samples)
    return a, r * np.exp(1j * theta)


def _worst(sample: ResidualSample) -> WorstPoint:
    return WorstPoint(
        float(sample.a),
        complex(sample.z),
        float(sample.residual),
        sample.method,
        tuple(sorted(flag.value for flag in sample.flags)),
    )


def run_sweep(
    cfg: SweepConfig,
    evaluator: Optional[Evaluator] = None,
    progress: Optional[Callable[[int], None]] = None,
) -> SweepReport:
    """
    Run the recurrence sweep described by cfg.

    Args:
        cfg: Sampling configuration
        evaluator: Overrides the evaluation; defaults to u_pcf with cfg.method_override
        progress: Called with the number of points finished after each point

    Returns:
        SweepReport; identical configs give identical reports
    """
    evaluate = evaluator or default_evaluator(EvalOptions(method=cfg.method_override))
    a_values, z_values = sample_points(cfg)
    report = SweepReport(n_samples=cfg.n_samples, threshold=FRAC_THRESHOLD)

    residuals: list[float] = []
    worst: list[tuple[float, int, WorstPoint]] = []
    for index, (a, z) in enumerate(zip(a_values.tolist(), z_values.tolist())):
        try:
            sample = recurrence_sample(a, z, evaluate)
        except PCFError as exc:
            report.failures.append((a, z, str(exc)))
            logger.warning("sweep point %d failed: %s", index, exc)
        else:
            method = sample.method
            report.method_counts[method] = report.method_counts.get(method, 0) + 1
            if EvalFlag.NEAR_ZERO_OF_U in sample.flags:
                report.flagged_points.append(_worst(sample))
            else:
                residuals.append(sample.residual)
                entry = (sample.residual, -index, _worst(sample))
                if len(worst) < cfg.worst_k:
                    heapq.heappush(worst, entry)
                elif cfg.worst_k > 0:
                    heapq.heappushpop(worst, entry)
        if progress is not None:
            progress(index + 1)

    if residuals:
        values = np.asarray(residuals)
        report.max_residual = float(values.max())
        report.quantiles = {
            q: float(v)
            for q, v in zip(QUANTILES, np.quantile(values, [q / 100.0 for q in QUANTILES]))
        }
        report.frac_above = float(np.mean(values > FRAC_THRESHOLD))
    report.worst_points = [entry[2] for entry in sorted(worst, key=lambda e: (-e[0], -e[1]))]
    logger.debug(
        "sweep of %d points: max residual %.3e, %d flagged, %d failed",
        cfg.n_samples,
        report.max_residual,
        len(report.flagged_points),
        len(report.failures),
    )
    return report
