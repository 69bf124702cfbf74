"""
Poincare module for pcfu.

Large-|z| asymptotic expansion of U(a,z) and the bound on its remainder.
"""

from engine.poincare.bound import BoundBreakdown, coefficients, eta_hat, f_closed, remainder_bound
from engine.poincare.expansion import ExpansionEval, leading_factor, u_poincare

__all__ = [
    "ExpansionEval",
    "u_poincare",
    "leading_factor",
    "BoundBreakdown",
    "remainder_bound",
    "coefficients",
    "f_closed",
    "eta_hat",
]
