"""
Maclaurin module for pcfu.

Power series of U(a,z) about z = 0 for small |z|.
"""

from engine.maclaurin.series import (
    FundamentalPair,
    SeriesBranch,
    SeriesEval,
    fundamental_pair,
    select_branch,
    u_at_zero,
    u_maclaurin,
)

__all__ = [
    "SeriesEval",
    "SeriesBranch",
    "FundamentalPair",
    "u_at_zero",
    "u_maclaurin",
    "fundamental_pair",
    "select_branch",
]
