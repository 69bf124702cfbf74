"""
Special-function base for pcfu.

Real Gamma family and complex Airy functions, the two special functions the
evaluation methods for U(a,z) are built from.
"""

from engine.special.airy import AiryPair, airy_ai, airy_rotated
from engine.special.gamma import gamma_real, log_gamma_real, pochhammer, recip_gamma

__all__ = [
    "gamma_real",
    "log_gamma_real",
    "recip_gamma",
    "pochhammer",
    "AiryPair",
    "airy_ai",
    "airy_rotated",
]
