"""
Remainder Bound for the Large-|z| Expansion

For 0 <= a <= 10, |z| >= 12 and |arg z| <= pi/2, the remainder R_n(a,z) of the
n-term expansion (scaled by z^{-a-1/2} e^{-z^2/4}) is bounded by term1 + term2:

    term1 = eta_hat_n(a, -0.45) (a+1/2)_{2n} / (n! |2 z^2|^n)
    term2 = |z|^{2a+1} / Gamma(a+1/2) * int_{0.45}^inf t^{a-1/2} e^{-|z|^2 t} h_n(a, t) dt

eta_hat_n(a, -t) is the normalized tail of the Maclaurin series of

    f(a, t) = ((sqrt(1 + 2t) - 1) / t)^{a - 1/2} / sqrt(1 + 2t)

and h_n(a, t) = P(t) / sqrt|1 - 2t| + sum_{k<n} c_k (t/2)^k, with
c_k = (a+1/2)_{2k} / (k! (a+1/2)_k).

Design Decisions:
    - eta_hat comes from f(a, -0.45) minus the n-term partial sum with fsum
    - The 1/sqrt|1-2t| singularity is removed by t = 1/2 -+ v^2 on each side
    - The integral stops at t = 2; beyond it h_n(a,t) <= h_n(a,2) (t/2)^m is
      integrated in closed form with an upper incomplete gamma bound

Academic Context:
    Input: a in [0, 10], |z| >= 12, 1 <= n <= 50
    Transformation: Closed-form tail, trapezoidal integral, analytic tail bound
    Output: BoundBreakdown with both terms and their sum
    Limitation: A bound, not an estimate; it is loose away from a = 10, |z| = 12
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from engine.errors import DomainError
from engine.numerics.quadrature import trapezoid_refine
from engine.special.gamma import log_gamma_real

logger = logging.getLogger(__name__)

SPLIT = 0.45
CUTOFF = 2.0
A_RANGE = (0.0, 10.0)
MIN_ABS_Z = 12.0
MAX_N = 50
QUAD_TOL = 1e-8
QUAD_LEVELS = 18


@dataclass(frozen=True)
class BoundBreakdown:
    """
    Both parts of the remainder bound at one (a, |z|, n).

    Attributes:
        n: Number of terms in the expansion
        a: Order parameter
        absz: |z|
        term1: Contribution of t in [0, 0.45]
        term2: Contribution of t in [0.45, inf)
        total: term1 + term2

    Invariants:
        - term1, term2 >= 0
    """

    n: int
    a: float
    absz: float
    term1: float
    term2: float

    @property
    def total(self) -> float:
        """term1 + term2."""
        return self.term1 + self.term2


def coefficients(a: float, count: int) -> list[float]:
    """c_k = (a+1/2)_{2k} / (k! (a+1/2)_k) for k < count."""
    alpha = a + 0.5
    c = [1.0]
    for k in range(count - 1):
        c.append(c[-1] * (alpha + 2 * k) * (alpha + 2 * k + 1) / ((k + 1) * (alpha + k)))
    return c


def f_closed(a: float, t: float) -> float:
    """f(a, t) = ((sqrt(1+2t) - 1)/t)^{a-1/2} / sqrt(1+2t) for t > -1/2."""
    if t == 0.0:
        return 1.0
    root = math.sqrt(1.0 + 2.0 * t)
    # (root - 1)/t rewritten as 2/(root + 1) to avoid cancellation
    return (2.0 / (root + 1.0)) ** (a - 0.5) / root


def eta_hat(a: float, n: int, t: float = SPLIT) -> float:
    """eta_hat_n(a, -t): the tail of f(a, -t) past n terms over its first term."""
    c = coefficients(a, n + 1)
    x = 0.5 * t
    partial = [ck * x**k for k, ck in enumerate(c[:n])]
    tail = math.fsum([f_closed(a, -t)] + [-p for p in partial])
    return tail / (c[n] * x**n)


def _h_parts(a: float, n: int):
    """P(t) and the partial sum S(t) that make up h_n(a, t)."""
    c = np.array(coefficients(a, n))

    def p(t: np.ndarray) -> np.ndarray:
        if a >= 0.5:
            below = (2.0 / (1.0 + np.sqrt(np.clip(1.0 - 2.0 * t, 0.0, None)))) ** (a - 0.5)
            above = (2.0 / t) ** (0.5 * (a - 0.5))
            return np.where(t <= 0.5, below, above)
        return (0.5 * (np.sqrt(1.0 + 2.0 * t) + 1.0)) ** (0.5 - a)

    def s(t: np.ndarray) -> np.ndarray:
        return np.polynomial.polynomial.polyval(0.5 * t, c)

    return p, s


def _term2(a: float, absz: float, n: int) -> float:
    p, s = _h_parts(a, n)
    x2 = absz * absz
    log_pref = (2.0 * a + 1.0) * math.log(absz) - log_gamma_real(a + 0.5)

    def weight(t: np.ndarray) -> np.ndarray:
        return np.exp(log_pref + (a - 0.5) * np.log(t) - x2 * t)

    # t = 1/2 - v^2 on [0.45, 1/2] and t = 1/2 + v^2 on [1/2, 2]
    def left(v: np.ndarray) -> np.ndarray:
        t = 0.5 - v * v
        return weight(t) * (math.sqrt(2.0) * p(t) + 2.0 * v * s(t))

    def right(v: np.ndarray) -> np.ndarray:
        t = 0.5 + v * v
        return weight(t) * (math.sqrt(2.0) * p(t) + 2.0 * v * s(t))

    quad_l = trapezoid_refine(
        left, 0.0, math.sqrt(0.5 - SPLIT), QUAD_TOL, QUAD_LEVELS, min_levels=1
    )
    quad_r = trapezoid_refine(
        right, 0.0, math.sqrt(CUTOFF - 0.5), QUAD_TOL, QUAD_LEVELS, min_levels=1
    )

    # tail: h_n(a,t) <= h_n(a,2) (t/2)^m for t >= 2
    m = max(n - 1, 1)
    t_cut = np.array([CUTOFF])
    h_cut = float(p(t_cut)[0] / math.sqrt(2.0 * CUTOFF - 1.0) + s(t_cut)[0])
    shape = a + 0.5 + m
    x = CUTOFF * x2
    if x <= shape - 1.0:
        raise DomainError(f"tail bound needs 2|z|^2 > {shape - 1.0}")
    log_tail = (
        log_pref
        + math.log(h_cut)
        - m * math.log(CUTOFF)
        + (shape - 1.0) * math.log(x)
        - x
        - math.log(1.0 - (shape - 1.0) / x)
        - shape * math.log(x2)
    )
    return float(quad_l.value + quad_r.value) + math.exp(log_tail)


def remainder_bound(a: float, absz: float, n: int) -> BoundBreakdown:
    """
    Upper bound on |R_n(a, z)| for |arg z| <= pi/2.

    Raises:
        DomainError: Outside 0 <= a <= 10, |z| >= 12, 1 <= n <= 50
    """
    if not A_RANGE[0] <= a <= A_RANGE[1]:
        raise DomainError(f"remainder_bound needs 0 <= a <= 10, got {a}")
    if absz < MIN_ABS_Z:
        raise DomainError(f"remainder_bound needs |z| >= 12, got {absz}")
    if not 1 <= n <= MAX_N:
        raise DomainError(f"remainder_bound needs 1 <= n <= 50, got {n}")

    alpha = a + 0.5
    log_term1 = (
        math.log(eta_hat(a, n))
        + log_gamma_real(alpha + 2 * n)
        - log_gamma_real(alpha)
        - math.lgamma(n + 1)
        - n * math.log(2.0 * absz * absz)
    )
    term1 = math.exp(log_term1)
    term2 = _term2(a, absz, n)
    logger.debug("remainder_bound(a=%g, |z|=%g, n=%d): %.6e + %.6e", a, absz, n, term1, term2)
    return BoundBreakdown(n, a, absz, term1, term2)
