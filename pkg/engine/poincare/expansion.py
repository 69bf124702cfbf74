"""
Large-|z| Asymptotic Expansion

    U(a,z) ~ z^{-a-1/2} e^{-z^2/4} sum_s (-1)^s (a+1/2)_{2s} / (s! (2z^2)^s)

valid for |arg z| < 3 pi/4. The series diverges, so it is truncated when the
next term drops below tol relative to the partial sum, with a hard cap of
50 terms. For a = -(2m+1)/2 the Pochhammer symbol vanishes and the sum is finite.

Design Decisions:
    - z^{-a-1/2} e^{-z^2/4} is formed as a single exponential of its log
    - n_terms sums exactly that many terms (used to test the remainder bound)
"""

import cmath
import logging
from dataclasses import dataclass
from typing import Optional

from engine.errors import DomainError

logger = logging.getLogger(__name__)

MAX_TERMS = 50


@dataclass(frozen=True)
class ExpansionEval:
    """
    Result of u_poincare.

    Attributes:
        value: U(a, z)
        terms_used: Number of terms in the partial sum
        last_term: Magnitude of the first neglected term relative to the sum
        converged: False when the cap was reached before the tolerance
    """

    value: complex
    terms_used: int
    last_term: float
    converged: bool = True


def leading_factor(a: float, z: complex) -> complex:
    """z^{-a-1/2} e^{-z^2/4} with the principal logarithm."""
    return cmath.exp(-(a + 0.5) * cmath.log(z) - 0.25 * z * z)


def u_poincare(
    a: float, z: complex, tol: float = 1e-16, n_terms: Optional[int] = None
) -> ExpansionEval:
    """
    U(a, z) from the asymptotic expansion in 1/z^2.

    Args:
        a: Order parameter
        z: Argument, nonzero
        tol: Relative size of the neglected term at which summation stops
        n_terms: Sum exactly this many terms instead (1 <= n_terms <= 50)

    Raises:
        DomainError: If z = 0 or n_terms is out of range
    """
    z = complex(z)
    if z == 0:
        raise DomainError("the asymptotic expansion needs z != 0")
    if n_terms is not None and not 1 <= n_terms <= MAX_TERMS:
        raise DomainError(f"n_terms must lie in [1, {MAX_TERMS}], got {n_terms}")

    alpha = a + 0.5
    inv = 1.0 / (2.0 * z * z)
    term = 1.0 + 0j
    total = term
    limit = MAX_TERMS if n_terms is None else n_terms
    used = 1
    converged = n_terms is not None
    while used < limit:
        s = used - 1
        term = -term * (alpha + 2 * s) * (alpha + 2 * s + 1) * inv / (s + 1)
        if n_terms is None and abs(term) <= tol * abs(total):
            converged = True
            break
        total += term
        used += 1
    else:
        s = used - 1
        term = -term * (alpha + 2 * s) * (alpha + 2 * s + 1) * inv / (s + 1)
        if n_terms is None:
            converged = abs(term) <= tol * abs(total)

    if not converged:
        logger.warning("poincare: %d-term cap reached at a=%g, z=%s", MAX_TERMS, a, z)
    value = leading_factor(a, z) * total
    logger.debug("poincare U(%g, %s): %d terms", a, z, used)
    rel = abs(term) / abs(total) if total != 0 else 0.0
    return ExpansionEval(value, used, rel, converged)
