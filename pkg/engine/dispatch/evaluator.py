"""
Evaluation of U(a,z) over the Whole Complex Plane

Reduces any z to the principal domain 0 <= arg z <= pi/2 and evaluates there
with the method the region rule selects:

    Poincare   if |z| > 12 + |a|/6
    Airy       else if |a| > airy_threshold (20)
    Maclaurin  else if |z| <= 3 and |a| <= 10
    Integral   otherwise

Im z < 0 uses Schwarz reflection, U(a, conj z) = conj U(a, z). For
pi/2 < arg z <= pi the connection formula

    U(a, z) = -i e^{-a pi i} conj U(a, -conj z)
              + sqrt(2 pi) / Gamma(a + 1/2) e^{(1/4 - a/2) pi i} U(-a, -i z)

combines two principal-domain values.

Design Decisions:
    - arg z = pi/2 belongs to the principal domain, arg z = pi to the connection branch
    - 1/Gamma(a + 1/2) comes from recip_gamma, so the second term is exactly
      zero at a + 1/2 = 0, -1, ...; it is then not evaluated at all
    - est_error is a-priori: 5e-13 times the cancellation factor of the
      connection formula; above a factor 10 the result is flagged NEAR_ZERO_OF_U
    - A Maclaurin value that cancels by more than 1e3 is replaced by the integral
    - For real z an imaginary part below 1e-12 |U| is dropped silently, one below
      max(1e-8, 1e3 est_error) |U| with a warning; anything larger raises

Academic Context:
    Input: Real a with |a| <= 60, finite complex z
    Transformation: Reflection, connection formula, region rule
    Output: EvalResult with value, method tag, error estimate and flags
    Limitation: Relative accuracy is lost near the zeros of U
"""

import cmath
import logging
import math
from dataclasses import dataclass
from typing import Optional

from engine.config import MAX_ABS_ORDER
from engine.errors import (
    DomainError,
    NonConvergenceError,
    RangeOverflowError,
    SingularRegionError,
)
from engine.integral import u_integral
from engine.maclaurin import u_maclaurin
from engine.models import EvalFlag, EvalOptions, EvalResult, MethodTag
from engine.numerics.elementary import exp_i_pi, principal_arg
from engine.poincare import u_poincare
from engine.special.gamma import recip_gamma
from engine.uniform import u_airy_neg_a, u_airy_pos_a

logger = logging.getLogger(__name__)

BASE_ERROR = 5e-13
NEAR_ZERO_FACTOR = 10.0
POINCARE_RADIUS = 12.0
MACLAURIN_RADIUS = 3.0
MACLAURIN_MAX_ORDER = 10.0
MACLAURIN_CANCELLATION_LIMIT = 1e3
REAL_TOL = 1e-12
REAL_LOOSE_TOL = 1e-8
IMAG_ERROR_FACTOR = 1e3
SQRT_2PI = math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class MethodOutcome:
    """Value from one principal-domain method with the flags it raised."""

    value: complex
    method: MethodTag
    flags: frozenset[EvalFlag] = frozenset()
    cancellation: float = 1.0


def select_method(a: float, z: complex, opts: Optional[EvalOptions] = None) -> MethodTag:
    """
    Method the region rule assigns to (a, z) in the principal domain.

    Args:
        a: Order parameter
        z: Argument with 0 <= arg z <= pi/2
        opts: Supplies airy_threshold and use_maclaurin
    """
    opts = opts or EvalOptions()
    absz = abs(z)
    absa = abs(a)
    if absz > POINCARE_RADIUS + absa / 6.0:
        return MethodTag.POINCARE
    if absa > opts.airy_threshold:
        return MethodTag.AIRY
    if opts.use_maclaurin and absz <= MACLAURIN_RADIUS and absa <= MACLAURIN_MAX_ORDER:
        return MethodTag.MACLAURIN
    return MethodTag.INTEGRAL


def connection_coefficient(a: float) -> complex:
    """sqrt(2 pi) / Gamma(a + 1/2) e^{(1/4 - a/2) pi i}; exactly 0 at the gamma poles."""
    rg = recip_gamma(a + 0.5)
    if rg == 0.0:
        return 0j
    return SQRT_2PI * rg * exp_i_pi(0.25 - 0.5 * a)


def evaluate_method(method: MethodTag, a: float, z: complex, tol: float = 1e-15) -> MethodOutcome:
    """
    Evaluate U(a, z) with one method, without domain reduction.

    Raises:
        DomainError: If the method cannot be used at (a, z)
    """
    z = complex(z)
    if method is MethodTag.MACLAURIN:
        series = u_maclaurin(a, z, tol)
        flags = frozenset() if series.converged else frozenset({EvalFlag.SERIES_WEAK})
        return MethodOutcome(series.value, method, flags, series.cancellation)
    if method is MethodTag.INTEGRAL:
        try:
            quad = u_integral(a, z, tol)
        except SingularRegionError:
            logger.debug("degenerate saddle at a=%g, z=%s; using maclaurin", a, z)
            return evaluate_method(MethodTag.MACLAURIN, a, z, tol)
        flags = frozenset() if quad.converged else frozenset({EvalFlag.QUADRATURE_WEAK})
        return MethodOutcome(quad.value, method, flags)
    if method is MethodTag.AIRY:
        u = 2.0 * abs(a)
        if a < 0.0:
            value = u_airy_neg_a(u, z / math.sqrt(2.0 * u))
        else:
            value = u_airy_pos_a(u, z)
        return MethodOutcome(value, method)
    if method is MethodTag.POINCARE:
        expansion = u_poincare(a, z, tol)
        flags = frozenset() if expansion.converged else frozenset({EvalFlag.SERIES_WEAK})
        return MethodOutcome(expansion.value, method, flags)
    raise DomainError(f"{method.value} is not a principal-domain method")


def _principal(a: float, z: complex, opts: EvalOptions) -> MethodOutcome:
    method = opts.method or select_method(a, z, opts)
    logger.debug("U(%g, %s) -> %s", a, z, method.value)
    try:
        outcome = evaluate_method(method, a, z, opts.tol)
        if (
            opts.method is None
            and outcome.method is MethodTag.MACLAURIN
            and outcome.cancellation > MACLAURIN_CANCELLATION_LIMIT
        ):
            logger.debug(
                "maclaurin cancels by %.1e at a=%g, z=%s; using the integral",
                outcome.cancellation,
                a,
                z,
            )
            outcome = evaluate_method(MethodTag.INTEGRAL, a, z, opts.tol)
        return outcome
    except OverflowError as exc:
        raise RangeOverflowError(f"U({a}, {z}) leaves double range") from exc


def _check_order(a: float) -> None:
    if not math.isfinite(a) or abs(a) > MAX_ABS_ORDER:
        raise DomainError(f"|a| must not exceed {MAX_ABS_ORDER:g}, got a={a}")


def _connection(a: float, z: complex, opts: EvalOptions) -> EvalResult:
    first = _principal(a, -z.conjugate(), opts)
    term1 = -1j * exp_i_pi(-a) * first.value.conjugate()
    flags = set(first.flags)
    components = [first.method]

    coeff = connection_coefficient(a)
    if coeff == 0:
        flags.add(EvalFlag.GAMMA_POLE_HANDLED)
        term2 = 0j
    else:
        second = _principal(-a, -1j * z, opts)
        term2 = coeff * second.value
        flags |= second.flags
        components.append(second.method)

    value = term1 + term2
    magnitude = abs(value)
    inflation = (abs(term1) + abs(term2)) / magnitude if magnitude > 0.0 else math.inf
    if inflation > NEAR_ZERO_FACTOR:
        flags.add(EvalFlag.NEAR_ZERO_OF_U)
    return EvalResult(
        value,
        MethodTag.CONNECTION,
        BASE_ERROR * max(inflation, 1.0),
        frozenset(flags),
        tuple(components),
    )


def u_pcf(a: float, z: complex, opts: Optional[EvalOptions] = None) -> EvalResult:
    """
    U(a, z) for real a and complex z.

    Args:
        a: Order parameter, |a| <= 60
        z: Finite complex argument
        opts: Tolerance, forced method and region settings

    Returns:
        EvalResult with the value, method tag, a-priori error and flags

    Raises:
        DomainError: If |a| > 60 or z is not finite, or a forced method does not apply
        RangeOverflowError: If the value leaves double range
        NonConvergenceError: If a real z yields a value with a sizeable imaginary part
    """
    opts = opts or EvalOptions()
    _check_order(a)
    z = complex(z)
    if not cmath.isfinite(z):
        raise DomainError(f"z must be finite, got {z}")

    if z.imag < 0.0:
        result = u_pcf(a, z.conjugate(), opts)
        return result.with_value(result.value.conjugate())

    if principal_arg(z) > 0.5 * math.pi:
        result = _connection(a, z, opts)
    else:
        outcome = _principal(a, z, opts)
        result = EvalResult(outcome.value, outcome.method, BASE_ERROR, outcome.flags)

    value = result.value
    if not cmath.isfinite(value):
        raise RangeOverflowError(f"U({a}, {z}) is not representable in double precision")
    if z.imag == 0.0:
        residue = abs(value.imag)
        if residue > max(REAL_LOOSE_TOL, IMAG_ERROR_FACTOR * result.est_error) * abs(value):
            raise NonConvergenceError(
                f"U({a}, {z}) should be real but has imaginary part {value.imag:.3e}"
                f" against real part {value.real:.3e}"
            )
        if residue > REAL_TOL * abs(value):
            logger.warning(
                "U(%g, %s): discarding imaginary part %.3e of a real value", a, z, value.imag
            )
        result = result.with_value(complex(value.real, 0.0))
    return result


def u_pcf_strict(a: float, z: complex, opts: Optional[EvalOptions] = None) -> EvalResult:
    """
    u_pcf that raises instead of returning a result from a weak quadrature or series.

    Raises:
        NonConvergenceError: If the result carries QUADRATURE_WEAK or SERIES_WEAK
    """
    result = u_pcf(a, z, opts)
    weak = result.flags & {EvalFlag.QUADRATURE_WEAK, EvalFlag.SERIES_WEAK}
    if weak:
        names = ", ".join(sorted(flag.value for flag in weak))
        raise NonConvergenceError(f"U({a}, {z}) did not converge ({names})")
    return result
