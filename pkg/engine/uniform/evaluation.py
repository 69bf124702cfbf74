"""
Airy-Type Evaluation of U(a,z) for Large |a|

With u = 2|a| and w_l(u, z~) = Ai_l(u^{2/3} zeta) calA + Ai_l'(u^{2/3} zeta) calB,
where Ai_l(x) = Ai(x e^{-2 pi i l/3}) and Ai_l' is its derivative in x:

    U(-u/2, sqrt(2u) z~)    = pi^{1/4} u^{-1/12} sqrt(2 Gamma(u/2 + 1/2)) w_0
    U( u/2, i sqrt(2u) z~)  = 2 pi^{3/4} e^{-(3u+1) pi i/12} w_{-1}
                              / (u^{1/12} sqrt Gamma(u/2 + 1/2))
    U( u/2, -i sqrt(2u) z~) = 2 pi^{3/4} e^{+(3u+1) pi i/12} w_{1}
                              / (u^{1/12} sqrt Gamma(u/2 + 1/2))

calA and calB come from the truncated u-expansions of the coefficient functions:
directly for |z~ - 1| >= 0.75, by the Cauchy integral over the contour table otherwise.

Design Decisions:
    - Ai_l' carries the chain-rule phase e^{-2 pi i l/3}; with it
      w_0 + e^{-2 pi i/3} w_1 + e^{2 pi i/3} w_{-1} = 0 holds identically
    - sqrt Gamma uses the power-form Gamma, not exp of log Gamma, to keep ~1e-15

Academic Context:
    Input: u >= 20 and z~ (or z) in the right half plane of z~
    Transformation: Coefficient sums, Airy functions at u^{2/3} zeta, prefactors
    Output: U(a, z) as a complex number
    Limitation: Above u of about 342 sqrt Gamma comes from log Gamma and loses a few digits
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

import numpy as np

from engine.errors import DomainError, SingularRegionError
from engine.numerics.elementary import exp_i_pi
from engine.special.airy import airy_ai, airy_rotated
from engine.special.gamma import GAMMA_MAX_ARG, gamma_real, log_gamma_real
from engine.uniform.coefficients import CoeffTables, ahat_bhat_at
from engine.uniform.maps import zeta_of
from engine.uniform.tables import get_coeff_tables

logger = logging.getLogger(__name__)

MIN_U = 20.0
R_SWITCH = 0.75
PI_QUARTER = math.pi**0.25
PI_THREE_QUARTERS = math.pi**0.75


class ABMethod(Enum):
    """How the coefficient functions were evaluated."""

    DIRECT = "direct"
    CONTOUR = "contour"


@dataclass(frozen=True)
class ABPair:
    """
    Coefficient functions calA(u, z~) and calB(u, z~).

    Attributes:
        cal_a: calA(u, z~)
        cal_b: calB(u, z~)
        method: DIRECT or CONTOUR

    Invariants:
        - Both values are real for real z~ > -1
    """

    cal_a: complex
    cal_b: complex
    method: ABMethod


def require_large_u(u: float) -> None:
    if u < MIN_U:
        raise DomainError(f"the Airy-type expansion needs u >= {MIN_U}, got {u}")


def sum_in_u(coeffs: Sequence[complex], u: float) -> complex:
    """sum_s coeffs[s] u^{-2s}."""
    inv2 = 1.0 / (u * u)
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * inv2 + c
    return acc


def resolve_tables(tables: Optional[CoeffTables]) -> CoeffTables:
    return get_coeff_tables() if tables is None else tables


def ab_direct(u: float, ztilde: complex, tables: Optional[CoeffTables] = None) -> ABPair:
    """
    calA and calB from their truncated expansions at z~.

    Raises:
        DomainError: If u < 20 or Re z~ < 0
        SingularRegionError: If |z~ - 1| < 0.75
    """
    require_large_u(u)
    zt = complex(ztilde)
    if abs(zt - 1.0) < R_SWITCH:
        raise SingularRegionError(f"direct coefficients need |z~ - 1| >= {R_SWITCH}, got {zt}")
    ahat, bhat = ahat_bhat_at(zt, resolve_tables(tables))
    return ABPair(sum_in_u(ahat, u), u ** (-4.0 / 3.0) * sum_in_u(bhat, u), ABMethod.DIRECT)


def contour_average(values: np.ndarray, nodes: np.ndarray, ztilde: complex) -> np.ndarray:
    """
    Trapezoidal Cauchy integral (1/N) sum_k f(t_k) (t_k - 1) / (t_k - z~).

    Args:
        values: f at the nodes, shape (N,) or (N, m)
        nodes: Points on |t - 1| = 1
        ztilde: Point strictly inside the circle

    Returns:
        Interpolated f(z~), shape () or (m,)
    """
    weights = (nodes - 1.0) / (nodes - ztilde) / nodes.shape[0]
    return weights @ values


def ab_contour(u: float, ztilde: complex, tables: Optional[CoeffTables] = None) -> ABPair:
    """
    calA and calB through the Cauchy integral over the contour table.

    Raises:
        DomainError: If u < 20
        SingularRegionError: If |z~ - 1| >= 1 (outside the contour)
    """
    require_large_u(u)
    zt = complex(ztilde)
    if abs(zt - 1.0) >= 1.0:
        raise SingularRegionError(f"z~ = {zt} lies outside the Cauchy contour")
    tab = resolve_tables(tables)
    ahat = contour_average(tab.ahat_vals, tab.contour_nodes, zt)
    bhat = contour_average(tab.bhat_vals, tab.contour_nodes, zt)
    return ABPair(sum_in_u(ahat, u), u ** (-4.0 / 3.0) * sum_in_u(bhat, u), ABMethod.CONTOUR)


def ab_pair(u: float, ztilde: complex, tables: Optional[CoeffTables] = None) -> ABPair:
    """calA and calB, contour inside |z~ - 1| < 0.75, direct outside."""
    zt = complex(ztilde)
    if abs(zt - 1.0) < R_SWITCH:
        return ab_contour(u, zt, tables)
    return ab_direct(u, zt, tables)


def w_l(l: int, u: float, ztilde: complex, ab: Optional[ABPair] = None) -> complex:
    """
    w_l(u, z~) = Ai_l(u^{2/3} zeta) calA + Ai_l'(u^{2/3} zeta) calB, l in {-1, 0, 1}.

    Raises:
        DomainError: If l is not -1, 0 or 1
    """
    pair = airy_rotated(l, u ** (2.0 / 3.0) * zeta_of(ztilde))
    ab = ab_pair(u, ztilde) if ab is None else ab
    return pair.ai * ab.cal_a + exp_i_pi(-2.0 * l / 3.0) * pair.aip * ab.cal_b


def sqrt_gamma_half(u: float) -> float:
    """sqrt(Gamma(u/2 + 1/2))."""
    x = 0.5 * u + 0.5
    if x <= GAMMA_MAX_ARG:
        return math.sqrt(gamma_real(x))
    return math.exp(0.5 * log_gamma_real(x))


def u_airy_neg_a(u: float, ztilde: complex, tables: Optional[CoeffTables] = None) -> complex:
    """
    U(-u/2, sqrt(2u) z~) for u >= 20 and Re z~ >= 0.

    Raises:
        DomainError: If u < 20 or Re z~ < 0
        RangeOverflowError: If Gamma(u/2 + 1/2) overflows
    """
    require_large_u(u)
    zt = complex(ztilde)
    if zt.real < 0.0:
        raise DomainError(f"z~ must have Re >= 0, got {zt}")
    ab = ab_pair(u, zt, tables)
    pair = airy_ai(u ** (2.0 / 3.0) * zeta_of(zt))
    w0 = pair.ai * ab.cal_a + pair.aip * ab.cal_b
    logger.debug("airy U(-%g/2, .) at z~=%s via %s coefficients", u, zt, ab.method.value)
    return PI_QUARTER * u ** (-1.0 / 12.0) * math.sqrt(2.0) * sqrt_gamma_half(u) * w0


def _u_airy_pos(
    u: float, ztilde: complex, l: int, tables: Optional[CoeffTables]
) -> complex:
    ab = ab_pair(u, ztilde, tables)
    wl = w_l(l, u, ztilde, ab)
    # l = -1 carries e^{-(3u+1) pi i/12}, l = +1 the conjugate phase
    phase = exp_i_pi(l * (3.0 * u + 1.0) / 12.0)
    logger.debug(
        "airy U(%g/2, .) at z~=%s via w_%d, %s coefficients", u, ztilde, l, ab.method.value
    )
    return 2.0 * PI_THREE_QUARTERS * phase * wl / (u ** (1.0 / 12.0) * sqrt_gamma_half(u))


def u_airy_pos_a(u: float, z: complex, tables: Optional[CoeffTables] = None) -> complex:
    """
    U(u/2, z) for u >= 20 and Im z >= 0, through w_{-1} at z~ = -i z / sqrt(2u).

    Raises:
        DomainError: If u < 20 or Im z < 0
    """
    require_large_u(u)
    z = complex(z)
    if z.imag < 0.0:
        raise DomainError(f"u_airy_pos_a needs Im z >= 0, got {z}")
    return _u_airy_pos(u, -1j * z / math.sqrt(2.0 * u), -1, tables)


def u_airy_pos_a_lower(u: float, z: complex, tables: Optional[CoeffTables] = None) -> complex:
    """
    U(u/2, z) for u >= 20 and Im z <= 0, through w_1 at z~ = i z / sqrt(2u).

    Raises:
        DomainError: If u < 20 or Im z > 0
    """
    require_large_u(u)
    z = complex(z)
    if z.imag > 0.0:
        raise DomainError(f"u_airy_pos_a_lower needs Im z <= 0, got {z}")
    return _u_airy_pos(u, 1j * z / math.sqrt(2.0 * u), 1, tables)
