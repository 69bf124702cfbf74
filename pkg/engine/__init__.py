"""
pcfu Engine

Numerical evaluation of the parabolic cylinder function U(a,z) for real order a
and complex argument z: Airy-type uniform expansions, a saddle-point integral,
Maclaurin and large-|z| series, joined by reflection and connection formulas.
"""

from engine.dispatch import connection_coefficient, select_method, u_pcf
from engine.errors import (
    DomainError,
    NonConvergenceError,
    PCFError,
    RangeOverflowError,
)
from engine.models import EvalFlag, EvalOptions, EvalResult, MethodTag

__all__ = [
    "u_pcf",
    "select_method",
    "connection_coefficient",
    "EvalOptions",
    "EvalResult",
    "EvalFlag",
    "MethodTag",
    "PCFError",
    "DomainError",
    "RangeOverflowError",
    "NonConvergenceError",
]
__version__ = "0.1.0"
