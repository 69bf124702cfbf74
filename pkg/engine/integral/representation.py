"""
Integral Representation of U(a,z)

Along t = t0 + tau, tau = delta + i lambda, the exponent relative to the saddle is

    phi(t0 + tau) - phi(t0) = tau^2 / 2 + alpha (tau / t0 - log(1 + tau / t0))

because t0 - z = alpha / t0. Hence

    U(a, z) = exp(prefactor_log) / sqrt(2 pi) * integral e^{g(tau)} d lambda

with g the expression above. For delta = 0 this is the saddle-centred form
exp(-s^2/2 + i alpha f(s/t0)), f(w) = w + i log(1 + i w); for delta = 1 it is
the same exponent evaluated on the shifted line, so both paths share one integrand.

Academic Context:
    Input: Real a, complex z with Re z >= 0
    Transformation: Trapezoidal rule in lambda on [-15, 15]
    Output: IntegralEval with the value and the quadrature record
    Limitation: Slow for large |a| where the integrand oscillates
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from engine.errors import DomainError
from engine.integral.saddle import PathSpec, SaddleData, saddle, select_path
from engine.numerics.quadrature import QuadratureResult, trapezoid_refine

logger = logging.getLogger(__name__)

INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)
MAX_LEVELS = 14


@dataclass(frozen=True)
class IntegralEval:
    """
    Result of u_integral.

    Attributes:
        value: U(a, z)
        saddle: Saddle data used
        path: Path that was integrated
        quadrature: Trapezoidal refinement record
    """

    value: complex
    saddle: SaddleData
    path: PathSpec
    quadrature: QuadratureResult

    @property
    def converged(self) -> bool:
        """True when the quadrature met its tolerance."""
        return self.quadrature.converged


def integrand(data: SaddleData, delta: float):
    """Vectorized e^{g(tau)} on tau = delta + i lambda."""
    t0 = data.t0
    alpha = data.alpha

    def f(lam: np.ndarray) -> np.ndarray:
        ratio = (delta + 1j * lam) / t0
        exponent = 0.5 * (delta + 1j * lam) ** 2 + alpha * (ratio - np.log1p(ratio))
        return np.exp(exponent)

    return f


def u_integral(
    a: float, z: complex, tol: float = 1e-15, path: Optional[PathSpec] = None
) -> IntegralEval:
    """
    U(a, z) from the integral representation.

    Args:
        a: Order parameter
        z: Argument with Re z >= 0
        tol: Relative tolerance; the quadrature gets tol / 10
        path: Force a path instead of select_path's choice

    Raises:
        DomainError: If Re z < 0
        SingularRegionError: At the degenerate saddle a = -1/2, z = 0
    """
    z = complex(z)
    if z.real < 0.0:
        raise DomainError(f"u_integral needs Re z >= 0, got {z}")
    data = saddle(a, z)
    spec = select_path(a, z, tol) if path is None else path
    quad = trapezoid_refine(
        integrand(data, spec.delta),
        -spec.truncation,
        spec.truncation,
        tol=spec.tol,
        max_levels=MAX_LEVELS,
        min_levels=2,
    )
    value = complex(np.exp(data.prefactor_log) * INV_SQRT_2PI * quad.value)
    logger.debug(
        "integral U(%g, %s): %s path, %d levels, converged=%s",
        a,
        z,
        spec.kind.value,
        quad.levels_used,
        quad.converged,
    )
    return IntegralEval(value, data, spec, quad)
