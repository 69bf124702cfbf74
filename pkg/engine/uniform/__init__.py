"""
Airy-type uniform expansion of U(a,z) for large |a|.

Variable maps, exact coefficient generation, the turning-point contour table,
the evaluation of U from w_l, and the truncation diagnostic.
"""

from engine.uniform.coefficients import (
    CoeffTables,
    ahat_bhat_at,
    build_coeff_tables,
    contour_nodes,
    generate_e_polys,
    ratio_sequence,
)
from engine.uniform.diagnostics import delta_diag, exact_cal_a
from engine.uniform.evaluation import (
    ABMethod,
    ABPair,
    ab_contour,
    ab_direct,
    ab_pair,
    contour_average,
    u_airy_neg_a,
    u_airy_pos_a,
    u_airy_pos_a_lower,
    w_l,
)
from engine.uniform.maps import UniformMap, map_ztilde, zeta_of
from engine.uniform.tables import get_coeff_tables

__all__ = [
    "UniformMap",
    "map_ztilde",
    "zeta_of",
    "CoeffTables",
    "build_coeff_tables",
    "generate_e_polys",
    "ratio_sequence",
    "contour_nodes",
    "ahat_bhat_at",
    "get_coeff_tables",
    "ABMethod",
    "ABPair",
    "ab_direct",
    "ab_contour",
    "ab_pair",
    "contour_average",
    "w_l",
    "u_airy_neg_a",
    "u_airy_pos_a",
    "u_airy_pos_a_lower",
    "delta_diag",
    "exact_cal_a",
]
