"""
Saddle Point and Path Selection for the Integral Representation

U(a,z) = e^{z^2/4} / (i sqrt(2 pi)) integral_{c - i inf}^{c + i inf} e^{phi(t)} dt with
phi(t) = t^2/2 - z t - alpha log t, alpha = a + 1/2. The relevant saddle is
t0 = (z + sqrt(z^2 + 4 alpha)) / 2, and the vertical line through it is the path.

When t0 drifts towards the imaginary axis (Re z = 0 with z^2 + 4 alpha < 0 is
the classic case) the vertical line is moved one unit to the right. The line
through t0 also goes bad well before Re t0 reaches 0 when alpha is large:
where it crosses the real axis, at distance Re t0 from the branch point t = 0,
the term -alpha log t can lift the integrand far above its value at the saddle.

Design Decisions:
    - Always shift when Re(t0) < 0.1, a tunable module constant
    - Otherwise compare the peak of Re(phi - phi(t0)) on both lines, taken at the
      real-axis crossing and at the height of the saddle, and keep the lower one
    - Shift distance 1 and truncation half-width 15 are fixed
    - Selection is a pure function of (a, z)
"""

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from engine.errors import SingularRegionError

SHIFT_TRIGGER = 0.1
SHIFT_DELTA = 1.0
TRUNCATION = 15.0


class PathKind(Enum):
    """Vertical path through the saddle, or one shifted to the right."""

    DIRECT = "direct"
    SHIFTED = "shifted"


@dataclass(frozen=True)
class SaddleData:
    """
    Saddle point of phi and the log of the prefactor it produces.

    Attributes:
        alpha: a + 1/2
        t0: (z + sqrt(z^2 + 4 alpha)) / 2, principal root
        prefactor_log: -z sqrt(z^2 + 4 alpha) / 4 + alpha / 2 - alpha log t0

    Invariants:
        - t0^2 - z t0 - alpha == 0 up to rounding
        - prefactor_log == z^2/4 + phi(t0)
    """

    alpha: float
    t0: complex
    prefactor_log: complex


@dataclass(frozen=True)
class PathSpec:
    """
    Integration path t = t0 + delta + i lambda, lambda in [-truncation, truncation].

    Attributes:
        kind: DIRECT (delta = 0) or SHIFTED (delta = 1)
        delta: Horizontal shift of the path
        truncation: Half-width of the lambda interval
        tol: Relative tolerance handed to the quadrature
    """

    kind: PathKind
    delta: float
    truncation: float = TRUNCATION
    tol: float = 1e-16


def saddle(a: float, z: complex) -> SaddleData:
    """
    Saddle point data for U(a, z).

    Raises:
        SingularRegionError: If t0 = 0 (a = -1/2 and z = 0)
    """
    alpha = a + 0.5
    z = complex(z)
    root = cmath.sqrt(z * z + 4.0 * alpha)
    t0 = 0.5 * (z + root)
    if t0 == 0:
        raise SingularRegionError(f"degenerate saddle at a={a}, z={z}")
    log_t0 = cmath.log(t0)
    return SaddleData(alpha, t0, -0.25 * z * root + 0.5 * alpha - alpha * log_t0)


def path_peak(data: SaddleData, delta: float) -> float:
    """
    Largest Re(phi(t) - phi(t0)) on t = t0 + delta + i lambda among the points
    level with the saddle (lambda = 0) and on the real axis (lambda = -Im t0).

    The real-axis point is skipped when it lies beyond the truncated path.
    """
    t0 = data.t0
    peak = -math.inf
    for lam in (0.0, -t0.imag):
        if abs(lam) > TRUNCATION:
            continue
        tau = complex(delta, lam)
        ratio = tau / t0
        g = 0.5 * tau * tau + data.alpha * (ratio - cmath.log(1.0 + ratio))
        peak = max(peak, g.real)
    return peak


def select_path(a: float, z: complex, tol: float = 1e-15) -> PathSpec:
    """
    SHIFTED when Re(t0) < 0.1 or when the shifted line peaks lower than the
    line through the saddle; DIRECT otherwise.

    Args:
        a: Order parameter
        z: Argument with Re z >= 0
        tol: Overall tolerance; the quadrature receives tol / 10
    """
    data = saddle(a, z)
    if data.t0.real < SHIFT_TRIGGER or path_peak(data, SHIFT_DELTA) < path_peak(data, 0.0):
        return PathSpec(PathKind.SHIFTED, SHIFT_DELTA, TRUNCATION, tol / 10.0)
    return PathSpec(PathKind.DIRECT, 0.0, TRUNCATION, tol / 10.0)
