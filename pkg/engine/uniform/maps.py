"""
Variable Maps of the Airy-Type Expansion

For a scaled argument z~ the expansion needs

    w    = sqrt(z~^2 - 1)             (analytic in Re z~ > 0 off the turning point)
    beta = z~ / w
    xi   = (z~ w - log(z~ + w)) / 2   = integral_1^z~ sqrt(t^2 - 1) dt
    zeta with (2/3) zeta^{3/2} = xi

and the amplitudes (zeta / (z~^2 - 1))^{1/4} and (zeta (z~^2 - 1))^{-1/4}.

Design Decisions:
    - |z~| >= 1 uses w = z~ sqrt(1 - z~^-2) and the recast zeta formula;
      |z~| < 1 uses w = +-i sqrt(1 - z~^2) and the arccos form, sign from Im z~
    - On (0, 1) itself the limit from above is taken
    - Within 0.25 of z~ = 1 zeta comes from its power series about the turning
      point, where the closed forms cancel
    - The second amplitude is 1 / (amp_a * w), never a principal power of the
      product zeta (z~^2 - 1)

Academic Context:
    Input: Complex z~ with Re z~ >= 0
    Transformation: Closed-form maps with branch-consistent roots
    Output: UniformMap
    Limitation: beta and xi are singular at z~ = 1; map_ztilde refuses |z~ - 1| < 1e-8
"""

import cmath
from dataclasses import dataclass

from engine.errors import DomainError, SingularRegionError

TURNING_POINT_GUARD = 1e-8
TURNING_SERIES_RADIUS = 0.25
_CBRT2 = 2.0 ** (1.0 / 3.0)


def _turning_series_coeffs(count: int) -> tuple[float, ...]:
    """d_k with xi = (2/3) sqrt(2) s^{3/2} sum d_k s^k, s = z~ - 1, d_0 = 1."""
    coeffs = []
    binom = 1.0
    for k in range(count):
        if k > 0:
            binom *= (0.5 - k + 1) / k
        coeffs.append(1.5 * binom * 0.5**k / (k + 1.5))
    return tuple(coeffs)


_TURNING_COEFFS = _turning_series_coeffs(28)


@dataclass(frozen=True)
class UniformMap:
    """
    Maps of one scaled argument.

    Attributes:
        ztilde: The scaled argument z~
        w: sqrt(z~^2 - 1) on the analytic branch
        beta: z~ / w
        xi: (z~ w - log(z~ + w)) / 2
        zeta: Airy variable; real negative on (-1, 1), non-negative on [1, inf)
        amp_a: (zeta / (z~^2 - 1))^{1/4}
        amp_b: (zeta (z~^2 - 1))^{-1/4}

    Invariants:
        - (2/3) zeta^{3/2} == xi up to rounding off the cut (0, 1)
        - amp_a * amp_b * w == 1
    """

    ztilde: complex
    w: complex
    beta: complex
    xi: complex
    zeta: complex
    amp_a: complex
    amp_b: complex


def zeta_of(ztilde: complex) -> complex:
    """
    The Airy variable zeta(z~), valid at the turning point as well.

    Raises:
        DomainError: If Re z~ < 0
    """
    zt = complex(ztilde)
    if zt.real < 0.0:
        raise DomainError(f"z~ must have Re >= 0, got {zt}")
    s = zt - 1.0
    if abs(s) < TURNING_SERIES_RADIUS:
        acc = 0j
        for d in reversed(_TURNING_COEFFS):
            acc = acc * s + d
        return _CBRT2 * s * acc ** (2.0 / 3.0)
    if abs(zt) >= 1.0:
        inv2 = 1.0 / (zt * zt)
        root = cmath.sqrt(1.0 - inv2)
        bracket = 0.75 * (root - inv2 * cmath.log(1.0 + root) - cmath.log(zt) * inv2)
        return zt ** (4.0 / 3.0) * bracket ** (2.0 / 3.0)
    root = cmath.sqrt(1.0 - zt * zt)
    rho = 0.75 * (cmath.acos(zt) - zt * root)
    return -(rho ** (2.0 / 3.0))


def map_ztilde(ztilde: complex) -> UniformMap:
    """
    Compute w, beta, xi, zeta and the amplitudes at z~.

    Raises:
        DomainError: If Re z~ < 0
        SingularRegionError: If |z~ - 1| < 1e-8
    """
    zt = complex(ztilde)
    if abs(zt - 1.0) < TURNING_POINT_GUARD:
        raise SingularRegionError(f"z~ = {zt} is at the turning point")
    zeta = zeta_of(zt)

    if abs(zt) >= 1.0:
        w = zt * cmath.sqrt(1.0 - 1.0 / (zt * zt))
    else:
        sign = 1.0 if zt.imag >= 0.0 else -1.0
        w = sign * 1j * cmath.sqrt(1.0 - zt * zt)

    amp_a = (zeta / (w * w)) ** 0.25
    return UniformMap(
        ztilde=zt,
        w=w,
        beta=zt / w,
        xi=0.5 * (zt * w - cmath.log(zt + w)),
        zeta=zeta,
        amp_a=amp_a,
        amp_b=1.0 / (amp_a * w),
    )
