"""
Test fixtures for pcfu.

Reference values with closed forms or classical constants, and small helpers
shared by the test modules.
"""

import cmath
import math

import mpmath

# Closed forms: U(-1/2, z) = exp(-z^2/4)
U_MINUS_HALF_AT_1 = math.exp(-0.25)  # 0.778800783071...
U_MINUS_HALF_AT_1_5 = math.exp(-0.5625)  # 0.569782824731...

# U(1/2, z) = sqrt(pi/2) e^{z^2/4} erfc(z / sqrt 2)
U_HALF_AT_1 = math.sqrt(0.5 * math.pi) * math.exp(0.25) * math.erfc(1.0 / math.sqrt(2.0))

# U(0, 0) = sqrt(pi) 2^{-1/4} / Gamma(3/4)
U_ZERO_AT_ZERO = math.sqrt(math.pi) * 2.0**-0.25 / math.gamma(0.75)

SQRT_PI = 1.7724538509055160
LOG_SQRT_PI = 0.5723649429247001
RECIP_SQRT_PI = 0.5641895835477563
GAMMA_10_5 = 1133278.3889487855
RECIP_GAMMA_MINUS_2_5 = -15.0 / (8.0 * SQRT_PI)

AI_0 = 0.35502805388781724
AIP_0 = -0.25881940379280680
AI_5 = 1.0834442813607441e-4

SQRT_2PI = math.sqrt(2.0 * math.pi)

# remainder bound at a = 10, |z| = 12, n = 35
BOUND_TERM1 = 5.66790e-14
BOUND_TERM2 = 5.95016e-15

RECURRENCE_LIMIT = 5e-13


def rel(u: complex, v: complex) -> float:
    """Relative difference of u against the reference v."""
    scale = abs(v)
    return abs(u - v) if scale == 0.0 else abs(u - v) / scale


def u_minus_half(z: complex) -> complex:
    """U(-1/2, z) = exp(-z^2/4)."""
    return cmath.exp(-0.25 * complex(z) ** 2)


def mp_complex(func, *args, **kwargs) -> complex:
    """Evaluate an mpmath function at 30 digits and round to a Python complex."""
    with mpmath.workdps(30):
        return complex(func(*args, **kwargs))
