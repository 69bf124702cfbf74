"""
Adaptive Trapezoidal Quadrature

For integrands that are analytic in a strip around the real interval and
negligible at its ends, the trapezoidal rule converges geometrically in the
number of nodes. Halving the step reuses every previous node, so each level
only evaluates the new midpoints.

Design Decisions:
    - Stop when successive estimates differ by tol * |value| or by the
      rounding level 8 eps * h * sum |f|, whichever is larger
    - The estimate at level k is accepted when level k + 1 agrees with it;
      no level below `min_levels` is accepted
    - Hitting the level cap is reported, not raised; the caller flags the result

Academic Context:
    Input: Vectorized integrand f(x) -> array, finite interval [a, b]
    Transformation: Nested trapezoidal sums with step h0 / 2**level
    Output: QuadratureResult with the value and convergence history
    Limitation: Slow (O(h^2)) for integrands with kinks or endpoint derivatives
"""

import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np

logger = logging.getLogger(__name__)

EPS = float(np.finfo(float).eps)
TINY = 1e-300


@dataclass(frozen=True)
class QuadratureResult:
    """
    Outcome of trapezoid_refine.

    Attributes:
        value: Final estimate of the integral
        levels_used: Level of the accepted estimate, or max_levels without convergence
        last_delta: |difference| between the last two estimates
        converged: True when the stopping rule was met before the level cap
        deltas: Difference recorded at every level
    """

    value: complex
    levels_used: int
    last_delta: float
    converged: bool
    deltas: tuple[float, ...] = ()


def trapezoid_refine(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    tol: float,
    max_levels: int = 14,
    initial_panels: int = 8,
    min_levels: int = 0,
) -> QuadratureResult:
    """
    Integrate f over [a, b] with step halving until the estimate settles.

    Args:
        f: Function accepting a float array of nodes, returning values of the same shape
        a: Lower limit
        b: Upper limit
        tol: Relative tolerance on successive estimates
        max_levels: Maximum number of halvings
        initial_panels: Number of panels at level 0, so h0 = (b - a) / initial_panels
        min_levels: Lowest level whose estimate may be accepted

    Returns:
        QuadratureResult; `converged` is False when max_levels was reached
    """
    n = initial_panels
    h = (b - a) / n
    fx = np.asarray(f(a + h * np.arange(n + 1)))
    total = h * (fx.sum() - 0.5 * (fx[0] + fx[-1]))
    abs_total = h * float(np.abs(fx).sum())

    deltas: list[float] = []
    for level in range(1, max_levels + 1):
        h *= 0.5
        fm = np.asarray(f(a + h * (2 * np.arange(n) + 1)))
        refined = 0.5 * total + h * fm.sum()
        abs_total = 0.5 * abs_total + h * float(np.abs(fm).sum())
        delta = float(abs(refined - total))
        deltas.append(delta)
        total = refined
        n *= 2

        if level - 1 >= min_levels:
            target = max(tol * max(float(abs(total)), TINY), 8.0 * EPS * abs_total)
            if delta <= target:
                return QuadratureResult(_scalar(total), level - 1, delta, True, tuple(deltas))

    logger.warning(
        "trapezoid_refine: no convergence on [%g, %g] after %d levels (delta=%.3e)",
        a,
        b,
        max_levels,
        deltas[-1] if deltas else float("nan"),
    )
    return QuadratureResult(
        _scalar(total), max_levels, deltas[-1] if deltas else float("inf"), False, tuple(deltas)
    )


def _scalar(value) -> complex:
    if np.iscomplexobj(value):
        return complex(value)
    return float(value)
