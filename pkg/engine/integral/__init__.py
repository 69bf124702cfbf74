"""
Integral-representation module for pcfu.

Saddle point, path selection and the trapezoidal evaluation of U(a,z) on a
vertical line through (or just right of) the saddle.
"""

from engine.integral.representation import IntegralEval, u_integral
from engine.integral.saddle import (
    SHIFT_TRIGGER,
    PathKind,
    PathSpec,
    SaddleData,
    saddle,
    select_path,
)

__all__ = [
    "SaddleData",
    "PathSpec",
    "PathKind",
    "SHIFT_TRIGGER",
    "saddle",
    "select_path",
    "IntegralEval",
    "u_integral",
]
