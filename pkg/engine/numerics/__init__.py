"""
Numerics module for pcfu.

Building blocks with no knowledge of U(a,z): truncated formal power series,
exact rational polynomials, adaptive trapezoidal quadrature and exact-phase
trigonometric helpers.
"""

from engine.numerics.elementary import cos_pi, exp_i_pi, principal_arg, reldiff, sin_pi
from engine.numerics.polynomials import RationalPoly, poly_int_poly
from engine.numerics.quadrature import QuadratureResult, trapezoid_refine
from engine.numerics.series import FormalSeries, fps_cosh_sinh, fps_exp

__all__ = [
    "FormalSeries",
    "fps_exp",
    "fps_cosh_sinh",
    "RationalPoly",
    "poly_int_poly",
    "QuadratureResult",
    "trapezoid_refine",
    "sin_pi",
    "cos_pi",
    "exp_i_pi",
    "reldiff",
    "principal_arg",
]
