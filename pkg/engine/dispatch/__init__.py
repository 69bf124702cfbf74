"""
Dispatch module for pcfu.

Public entry point u_pcf: domain reduction, region selection and result packaging.
"""

from engine.dispatch.evaluator import (
    BASE_ERROR,
    MethodOutcome,
    connection_coefficient,
    evaluate_method,
    select_method,
    u_pcf,
    u_pcf_strict,
)

__all__ = [
    "u_pcf",
    "u_pcf_strict",
    "select_method",
    "evaluate_method",
    "connection_coefficient",
    "MethodOutcome",
    "BASE_ERROR",
]
