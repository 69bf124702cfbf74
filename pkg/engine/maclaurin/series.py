"""
Maclaurin Series for Small |z|

U(a,z) = U(a,0) u1(a,z) + U'(a,0) u2(a,z), where u1 and u2 are the even and
odd solutions normalized by u1(0) = 1, u2'(0) = 1. Each is e^{-z^2/4} (or
e^{+z^2/4}) times a power series whose terms follow from a two-factor ratio:

    minus form: t_{k+1} = t_k (a + 1/2 + 2k) z^2 / ((2k+1)(2k+2))
    plus form:  t_{k+1} = t_k (a - 1/2 - 2k) z^2 / ((2k+1)(2k+2))

and the same with 3/2 and (2k+2)(2k+3) for u2. The exponential factor is
applied last, matched to the large-z behaviour: minus form for |arg z| <= 3 pi/4.

Design Decisions:
    - Terms are added until both series' last terms fall below 1.1e-16 of
      the larger of the partial sum and the largest term so far (the rounding
      floor of an alternating sum); a looser caller tolerance never shortens it
    - U(a,0) and U'(a,0) go through recip_gamma so gamma poles give exact zeros
    - Hard cap of 100 terms, reported as converged=False

Academic Context:
    Input: Real a, complex z with |z| <= 5
    Transformation: Two power series in z^2 and an exponential prefactor
    Output: SeriesEval with value and term count
    Limitation: Only useful for small |z|; cancellation grows with |z|^2 |a|
"""

import cmath
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from engine.special.gamma import recip_gamma

logger = logging.getLogger(__name__)

MAX_TERMS = 100
TERM_TOL = 1.1e-16
SOFT_RADIUS = 5.0
BRANCH_ARG = 0.75 * math.pi
SQRT_PI = math.sqrt(math.pi)


class SeriesBranch(Enum):
    """Which exponential prefactor multiplies the power series."""

    MINUS_EXP = "minus_exp"
    PLUS_EXP = "plus_exp"


@dataclass(frozen=True)
class SeriesEval:
    """
    Result of u_maclaurin.

    Attributes:
        value: U(a, z)
        terms_used: Terms summed per series (1 at z = 0)
        branch: Prefactor arrangement used
        converged: False when the 100-term cap was reached
        cancellation: Largest partial contribution over |value|; the rounding
            error is about 1.1e-16 times this
    """

    value: complex
    terms_used: int
    branch: SeriesBranch
    converged: bool = True
    cancellation: float = 1.0


@dataclass(frozen=True)
class FundamentalPair:
    """u1, u2 at one point, with their z-derivatives when requested."""

    u1: complex
    u2: complex
    du1: Optional[complex] = None
    du2: Optional[complex] = None
    terms_used: int = 1
    converged: bool = True
    peaks: tuple[float, float] = (1.0, 0.0)

    @property
    def wronskian(self) -> complex:
        """u1 u2' - u1' u2; identically 1."""
        if self.du1 is None or self.du2 is None:
            raise ValueError("wronskian needs derivatives; pass derivative=True")
        return self.u1 * self.du2 - self.du1 * self.u2


def u_at_zero(a: float) -> tuple[float, float]:
    """
    U(a, 0) and U'(a, 0).

    U(a,0)  =  sqrt(pi) 2^{-a/2 - 1/4} / Gamma(3/4 + a/2)
    U'(a,0) = -sqrt(pi) 2^{-a/2 + 1/4} / Gamma(1/4 + a/2)
    """
    scale = SQRT_PI * 2.0 ** (-0.5 * a)
    u0 = scale * 2.0**-0.25 * recip_gamma(0.75 + 0.5 * a)
    du0 = -scale * 2.0**0.25 * recip_gamma(0.25 + 0.5 * a)
    return u0, du0


def select_branch(z: complex) -> SeriesBranch:
    """MINUS_EXP for |arg z| <= 3 pi/4, PLUS_EXP otherwise."""
    if z == 0 or abs(cmath.phase(z)) <= BRANCH_ARG:
        return SeriesBranch.MINUS_EXP
    return SeriesBranch.PLUS_EXP


def fundamental_pair(
    a: float,
    z: complex,
    branch: Optional[SeriesBranch] = None,
    derivative: bool = False,
    tol: float = TERM_TOL,
) -> FundamentalPair:
    """
    Even and odd solutions u1, u2 summed in the requested prefactor arrangement.

    Args:
        a: Order parameter
        z: Argument
        branch: Prefactor arrangement; chosen from arg z when None
        derivative: Also return u1' and u2'
        tol: Relative size of the last term at which summation stops
    """
    z = complex(z)
    branch = select_branch(z) if branch is None else branch
    sign = -1.0 if branch is SeriesBranch.MINUS_EXP else 1.0

    if z == 0:
        return FundamentalPair(1.0, 0.0, 0.0 if derivative else None, 1.0 if derivative else None)

    z2 = z * z
    # ratio factors: minus form (a + 1/2 + 2k), plus form (a - 1/2 - 2k)
    shift1 = a + 0.5 if sign < 0 else -(a - 0.5)
    shift2 = a + 1.5 if sign < 0 else -(a - 1.5)
    t1, t2 = 1.0 + 0j, z
    s1, s2 = t1, t2
    peak1, peak2 = 1.0, abs(z)
    d1, d2 = 0.0 + 0j, 1.0 + 0j
    terms = 1
    converged = False
    while terms < MAX_TERMS:
        k = terms - 1
        t1 = t1 * (-sign) * (shift1 + 2 * k) * z2 / ((2 * k + 1) * (2 * k + 2))
        t2 = t2 * (-sign) * (shift2 + 2 * k) * z2 / ((2 * k + 2) * (2 * k + 3))
        s1 += t1
        s2 += t2
        if derivative:
            d1 += (2 * k + 2) * t1 / z
            d2 += (2 * k + 3) * t2 / z
        terms += 1
        peak1 = max(peak1, abs(t1))
        peak2 = max(peak2, abs(t2))
        if abs(t1) <= tol * max(abs(s1), peak1) and abs(t2) <= tol * max(abs(s2), peak2):
            converged = True
            break

    if not converged:
        logger.warning("maclaurin: %d-term cap reached at a=%g, z=%s", MAX_TERMS, a, z)

    pref = cmath.exp(sign * 0.25 * z2)
    if not derivative:
        return FundamentalPair(
            pref * s1, pref * s2, terms_used=terms, converged=converged, peaks=(peak1, peak2)
        )
    half = sign * 0.5 * z
    return FundamentalPair(
        pref * s1,
        pref * s2,
        pref * (d1 + half * s1),
        pref * (d2 + half * s2),
        terms,
        converged,
        (peak1, peak2),
    )


def u_maclaurin(a: float, z: complex, tol: float = TERM_TOL) -> SeriesEval:
    """
    U(a, z) from the Maclaurin series.

    Args:
        a: Order parameter
        z: Argument, |z| <= 5 recommended
        tol: Upper bound on the term cutoff; never looser than 1.1e-16
    """
    z = complex(z)
    branch = select_branch(z)
    u0, du0 = u_at_zero(a)
    if z == 0:
        return SeriesEval(complex(u0), 1, branch)
    if abs(z) > SOFT_RADIUS:
        logger.warning(
            "maclaurin used at |z|=%g beyond its intended radius %g", abs(z), SOFT_RADIUS
        )

    pair = fundamental_pair(a, z, branch, tol=min(tol, TERM_TOL))
    value = u0 * pair.u1 + du0 * pair.u2
    scale = abs(cmath.exp(0.25 * z * z * (-1.0 if branch is SeriesBranch.MINUS_EXP else 1.0)))
    largest = max(
        abs(u0 * pair.u1),
        abs(du0 * pair.u2),
        scale * abs(u0) * pair.peaks[0],
        scale * abs(du0) * pair.peaks[1],
    )
    magnitude = abs(value)
    cancellation = largest / magnitude if magnitude > 0.0 else math.inf
    logger.debug(
        "maclaurin U(%g, %s): %d terms, %s, cancellation %.1e",
        a,
        z,
        pair.terms_used,
        branch.value,
        cancellation,
    )
    return SeriesEval(value, pair.terms_used, branch, pair.converged, max(cancellation, 1.0))
