"""
Three-term recurrence check.

U(a-1, z) = z U(a, z) + (a + 1/2) U(a + 1, z) holds for every a and z, so the
normalized residual of three independent evaluations measures their accuracy.
The normalization divides by the largest of the three term magnitudes.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Optional

from engine.dispatch import u_pcf
from engine.errors import NonConvergenceError, PCFError
from engine.models import EvalFlag, EvalOptions, EvalResult

logger = logging.getLogger(__name__)

Evaluator = Callable[[float, complex], EvalResult]


@dataclass(frozen=True)
class ResidualSample:
    """
    Recurrence residual at one point with the three evaluations behind it.

    Attributes:
        a: Order of the central evaluation
        z: Argument
        residual: Normalized residual
        results: EvalResults at a - 1, a, a + 1
    """

    a: float
    z: complex
    residual: float
    results: tuple[EvalResult, EvalResult, EvalResult]

    @property
    def flags(self) -> frozenset[EvalFlag]:
        """Union of the flags of all three evaluations."""
        return self.results[0].flags | self.results[1].flags | self.results[2].flags

    @property
    def method(self) -> str:
        """Method tag of the central evaluation."""
        return self.results[1].method.value


def default_evaluator(opts: Optional[EvalOptions] = None) -> Evaluator:
    """u_pcf with fixed options."""

    def evaluate(a: float, z: complex) -> EvalResult:
        return u_pcf(a, z, opts)

    return evaluate


def recurrence_sample(
    a: float, z: complex, evaluator: Optional[Evaluator] = None
) -> ResidualSample:
    """
    Evaluate U at a - 1, a, a + 1 and form the normalized residual.

    Raises:
        NonConvergenceError: If any of the three evaluations fails; the message names the point
    """
    evaluate = evaluator or default_evaluator()
    z = complex(z)
    try:
        lower, centre, upper = (evaluate(a + shift, z) for shift in (-1.0, 0.0, 1.0))
    except PCFError as exc:
        raise NonConvergenceError(f"evaluation failed at a={a!r}, z={z!r}: {exc}") from exc

    t0 = lower.value
    t1 = z * centre.value
    t2 = (a + 0.5) * upper.value
    scale = max(abs(t0), abs(t1), abs(t2))
    residual = float(abs(t0 - t1 - t2) / scale) if scale > 0.0 else 0.0
    return ResidualSample(a, z, residual, (lower, centre, upper))


def recurrence_residual(a: float, z: complex, evaluator: Optional[Evaluator] = None) -> float:
    """Normalized recurrence residual at (a, z)."""
    return recurrence_sample(a, z, evaluator).residual
