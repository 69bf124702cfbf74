"""
Truncation diagnostic of the Airy-type expansion.

calA(u, z~) has an exact representation in terms of two values of U, which an
independent method can supply. Comparing it with the truncated sum
sum_{s<=n} Ahat_s / u^{2s} measures the truncation error Delta_n directly.

Two equivalent exact forms exist; "plus" uses U(u/2, -i sqrt(2u) z~) and
Ai'(x e^{-2 pi i/3}), "minus" uses U(u/2, i sqrt(2u) z~) and Ai'(x e^{2 pi i/3}),
with x = u^{2/3} zeta. Here Ai' means the derivative at the rotated argument.
"""

import math
from typing import Callable, Optional

from engine.errors import DomainError
from engine.numerics.elementary import exp_i_pi
from engine.special.airy import airy_ai, airy_rotated
from engine.uniform.coefficients import CoeffTables, ahat_bhat_at
from engine.uniform.evaluation import (
    PI_QUARTER,
    PI_THREE_QUARTERS,
    require_large_u,
    resolve_tables,
    sqrt_gamma_half,
    sum_in_u,
)
from engine.uniform.maps import zeta_of

UCallable = Callable[[float, complex], complex]


def exact_cal_a(
    u: float, ztilde: complex, independent_u: UCallable, variant: str = "plus"
) -> complex:
    """
    calA(u, z~) from two independently computed values of U.

    Args:
        u: Large parameter, u >= 20
        ztilde: Scaled argument
        independent_u: Callable (a, z) -> U(a, z) not based on this expansion
        variant: "plus" or "minus" exact form

    Raises:
        DomainError: For u < 20 or an unknown variant
    """
    require_large_u(u)
    if variant not in ("plus", "minus"):
        raise DomainError(f"variant must be 'plus' or 'minus', got {variant!r}")
    zt = complex(ztilde)
    sign = 1.0 if variant == "plus" else -1.0
    root = math.sqrt(2.0 * u)
    x = u ** (2.0 / 3.0) * zeta_of(zt)
    sg = sqrt_gamma_half(u)
    u12 = u ** (1.0 / 12.0)

    u_minus = complex(independent_u(-0.5 * u, root * zt))
    u_plus = complex(independent_u(0.5 * u, -sign * 1j * root * zt))
    rotated = airy_rotated(1 if variant == "plus" else -1, x).aip

    first = math.sqrt(2.0) * PI_THREE_QUARTERS * exp_i_pi(-sign * 5.0 / 6.0) * u12 / sg
    second = PI_QUARTER * u12 * exp_i_pi(-sign * (u + 1.0) / 4.0) * sg
    return first * u_minus * rotated - second * u_plus * airy_ai(x).aip


def delta_diag(
    n: int,
    u: float,
    ztilde: complex,
    independent_u: UCallable,
    tables: Optional[CoeffTables] = None,
    variant: str = "plus",
) -> complex:
    """
    Delta_n(u, z~) = calA_exact - sum_{s=0}^{n} Ahat_s(z~) / u^{2s}.

    Raises:
        DomainError: If n is outside 0..s_max, or for u < 20
    """
    tab = resolve_tables(tables)
    if not 0 <= n <= tab.s_max:
        raise DomainError(f"n must lie in 0..{tab.s_max}, got {n}")
    ahat, _ = ahat_bhat_at(ztilde, tab, n)
    return exact_cal_a(u, ztilde, independent_u, variant) - sum_in_u(ahat, u)
