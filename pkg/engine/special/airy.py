"""
Complex Airy Functions Ai(w) and Ai'(w)

Four evaluators cover the plane:
- Maclaurin series near the origin, and wherever its terms do not cancel badly
- Asymptotic expansion for |w| >= 9.5 with |arg w| <= 2 pi / 3
- An integral over [0, inf) in the sector |arg w| <= 0.56 pi, done with the
  trapezoidal rule after t = x**6 makes the integrand smooth and even
- The connection formula Ai(w) + e^{2 pi i/3} Ai(w e^{2 pi i/3})
  + e^{-2 pi i/3} Ai(w e^{-2 pi i/3}) = 0 for what is left near the negative axis

Design Decisions:
    - Lower half plane by Schwarz reflection, Ai(conj w) = conj Ai(w)
    - Series is accepted up to an estimated cancellation factor of 100
    - Every rotated argument lands in a sector served directly, so the
      connection formula never recurses more than once

Academic Context:
    Input: Complex w
    Transformation: Region selection, then one of the four evaluators
    Output: AiryPair(Ai(w), Ai'(w))
    Limitation: Relative accuracy degrades near the zeros on the negative axis
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from engine.errors import DomainError
from engine.numerics.quadrature import trapezoid_refine
from engine.special.gamma import gamma_real

AI0 = 0.35502805388781723926
AIP0 = -0.25881940379280679840

SERIES_RADIUS = 1.5
ASYMPTOTIC_RADIUS = 9.5
ASYMPTOTIC_SECTOR = 2.0 * math.pi / 3.0
INTEGRAL_SECTOR = 0.56 * math.pi
SERIES_GROWTH_LIMIT = 1e2
INTEGRAL_CUTOFF = 2.2

EPS = 2.0**-52
ROT = complex(-0.5, math.sqrt(3.0) / 2.0)  # e^{2 pi i / 3}
SQRT_PI = math.sqrt(math.pi)
GAMMA_5_6 = gamma_real(5.0 / 6.0)
GAMMA_7_6 = gamma_real(7.0 / 6.0)


@dataclass(frozen=True)
class AiryPair:
    """
    Ai and Ai' at one point.

    Attributes:
        ai: Ai(w)
        aip: Ai'(w)
    """

    ai: complex
    aip: complex

    def conjugate(self) -> "AiryPair":
        """Values at the conjugate point."""
        return AiryPair(self.ai.conjugate(), self.aip.conjugate())


def airy_ai(w: complex) -> AiryPair:
    """Ai(w) and Ai'(w) for complex w."""
    w = complex(w)
    # -0.0 imaginary parts would otherwise reach the upper-half evaluators with arg -pi
    w = complex(w.real, w.imag + 0.0)
    if w.imag < 0.0:
        return _airy_upper(w.conjugate()).conjugate()
    return _airy_upper(w)


def airy_rotated(l: int, w: complex) -> AiryPair:
    """
    Ai and Ai' at the rotated argument w e^{-2 pi i l / 3}, l in {-1, 0, 1}.

    The derivative is Ai' evaluated at the rotated argument; callers that
    need d/dw Ai(w e^{-2 pi i l/3}) multiply by e^{-2 pi i l/3} themselves.

    Raises:
        DomainError: If l is not -1, 0 or 1
    """
    if l not in (-1, 0, 1):
        raise DomainError(f"rotation index must be -1, 0 or 1, got {l}")
    if l == 0:
        return airy_ai(w)
    return airy_ai(complex(w) * (ROT.conjugate() if l == 1 else ROT))


def series_growth(w: complex) -> float:
    """Estimated cancellation factor of the Maclaurin series at w."""
    r = abs(w)
    theta = abs(cmath.phase(w))
    return math.exp((2.0 / 3.0) * r**1.5 * (1.0 + math.cos(1.5 * theta)))


def _airy_upper(w: complex) -> AiryPair:
    r = abs(w)
    theta = abs(cmath.phase(w))
    if r <= SERIES_RADIUS:
        return _airy_series(w)
    if r >= ASYMPTOTIC_RADIUS and theta <= ASYMPTOTIC_SECTOR:
        return _airy_asymptotic(w)
    if theta <= INTEGRAL_SECTOR:
        return _airy_integral(w)
    if series_growth(w) <= SERIES_GROWTH_LIMIT:
        return _airy_series(w)
    return _airy_connection(w)


def _airy_series(w: complex) -> AiryPair:
    w3 = w * w * w
    t, s, p, q = 1.0 + 0j, w, 0j, 1.0 + 0j
    f, g, fp, gp = t, s, p, q
    scale = abs(t) + abs(s) + abs(q)
    for k in range(1, 200):
        t = t * w3 / ((3 * k - 1) * (3 * k))
        s = s * w3 / ((3 * k) * (3 * k + 1))
        p = w * w / 2.0 if k == 1 else p * w3 / ((3 * k - 3) * (3 * k - 1))
        q = q * w3 / ((3 * k - 2) * (3 * k))
        f += t
        g += s
        fp += p
        gp += q
        scale += abs(t) + abs(s) + abs(p) + abs(q)
        if max(abs(t), abs(s), abs(p), abs(q)) <= EPS * 0.25 * scale:
            break
    return AiryPair(AI0 * f + AIP0 * g, AI0 * fp + AIP0 * gp)


def _airy_asymptotic(w: complex) -> AiryPair:
    zeta = (2.0 / 3.0) * w**1.5
    inv = 1.0 / zeta
    u_k = 1.0
    sum_u = 1.0 + 0j
    sum_v = 1.0 + 0j
    power = 1.0 + 0j
    last = math.inf
    for k in range(1, 60):
        u_k = u_k * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216 * k)
        v_k = -(6 * k + 1) / (6 * k - 1) * u_k
        power = -power * inv
        term_u = u_k * power
        term_v = v_k * power
        size = max(abs(term_u), abs(term_v))
        if size > last:
            break
        sum_u += term_u
        sum_v += term_v
        last = size
        if size <= EPS * 0.25 * min(abs(sum_u), abs(sum_v)):
            break
    quarter = w**0.25
    decay = cmath.exp(-zeta) / (2.0 * SQRT_PI)
    return AiryPair(decay / quarter * sum_u, -quarter * decay * sum_v)


def _airy_integral(w: complex) -> AiryPair:
    zeta = (2.0 / 3.0) * w**1.5
    half_inv = 1.0 / (2.0 * zeta)

    def f_ai(x: np.ndarray) -> np.ndarray:
        x6 = x**6
        return 6.0 * x**4 * np.exp(-x6) * (1.0 + x6 * half_inv) ** (-1.0 / 6.0)

    def f_aip(x: np.ndarray) -> np.ndarray:
        x6 = x**6
        return 6.0 * x6 * np.exp(-x6) * (1.0 + x6 * half_inv) ** (1.0 / 6.0)

    i_ai = trapezoid_refine(f_ai, 0.0, INTEGRAL_CUTOFF, 1e-16, 12, min_levels=1).value
    i_aip = trapezoid_refine(f_aip, 0.0, INTEGRAL_CUTOFF, 1e-16, 12, min_levels=1).value
    quarter = w**0.25
    decay = cmath.exp(-zeta) / (2.0 * SQRT_PI)
    return AiryPair(
        decay / (quarter * GAMMA_5_6) * i_ai,
        -quarter * decay / GAMMA_7_6 * i_aip,
    )


def _airy_connection(w: complex) -> AiryPair:
    up = airy_ai(w * ROT)
    down = airy_ai(w * ROT.conjugate())
    return AiryPair(
        -ROT * up.ai - ROT.conjugate() * down.ai,
        -ROT.conjugate() * up.aip - ROT * down.aip,
    )
