"""
Exact-phase trigonometry and small complex helpers.

sin(pi x) computed as math.sin(math.pi * x) loses the phase for large x and
never returns an exact zero at integers. Reducing x to the nearest half
integer first keeps both, which matters for the reflection formula of Gamma
and for phases such as exp(-a pi i) in the connection formula.
"""

import cmath
import math


def _reduce(x: float) -> tuple[int, float]:
    """Split x = n/2 + r with |r| <= 1/4; return (n mod 4, r)."""
    n = round(2.0 * x)
    return int(n) % 4, x - 0.5 * n


def sin_pi(x: float) -> float:
    """sin(pi x), exactly zero at integers."""
    quadrant, r = _reduce(x)
    if quadrant == 0:
        return math.sin(math.pi * r)
    if quadrant == 1:
        return math.cos(math.pi * r)
    if quadrant == 2:
        return -math.sin(math.pi * r)
    return -math.cos(math.pi * r)


def cos_pi(x: float) -> float:
    """cos(pi x), exactly zero at half integers."""
    quadrant, r = _reduce(x)
    if quadrant == 0:
        return math.cos(math.pi * r)
    if quadrant == 1:
        return -math.sin(math.pi * r)
    if quadrant == 2:
        return -math.cos(math.pi * r)
    return math.sin(math.pi * r)


def exp_i_pi(x: float) -> complex:
    """exp(i pi x) with the phase reduced exactly."""
    return complex(cos_pi(x), sin_pi(x))


def reldiff(u: complex, v: complex) -> float:
    """|u - v| / max(|u|, |v|), zero when both vanish."""
    scale = max(abs(u), abs(v))
    if scale == 0.0:
        return 0.0
    return abs(u - v) / scale


def principal_arg(z: complex) -> float:
    """Argument in (-pi, pi], with +0 and -0 imaginary parts both mapped to the upper edge."""
    if z.imag == 0.0 and z.real < 0.0:
        return math.pi
    return cmath.phase(z)
