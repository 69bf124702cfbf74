"""
Coefficient Machinery of the Airy-Type Expansion

The coefficient functions of the expansion are assembled from two ingredients:

    E_s(beta)   polynomials generated exactly from E_1 by a differential recursion
    a_s, a~_s   rational numbers generated from a_1 = a_2 = 5/72, a~_1 = a~_2 = -7/72

They combine into calE_s = E_s(beta) + (-1)^s a_s / (s xi^s) (and calE~_s with a~_s);
A_s is the v^{2s} coefficient of exp(sum calE~_{2s} v^{2s}) cosh(sum calE~_{2s+1} v^{2s+1})
and B_s the v^{2s+1} coefficient of exp(sum calE_{2s} v^{2s}) sinh(sum calE_{2s+1} v^{2s+1}).

Design Decisions:
    - Exact generation once per process (lru_cache); floats derived at table build
    - Every evaluation is batched over points so the contour table is one call
    - Contour nodes t_k = 1 + exp(2 pi i (k + 1/2) / N) never include t = 0
    - E_s is evaluated per point in beta or in q = beta^2 - 1, whichever has the
      smaller absolute-term sum; the beta form alone loses up to 1e-2 near |z~ - 1| = 1

Academic Context:
    Input: Scaled arguments z~ (batch), the generated polynomials and sequences
    Transformation: Formal-series composition of exp, cosh and sinh
    Output: Ahat_s = amp_a A_s and Bhat_s = amp_b B_s for s = 0..s_max
    Limitation: Direct evaluation loses digits near z~ = 1; the contour table covers that region
"""

import logging
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np
from numpy.polynomial import polynomial as npoly

from engine.errors import DomainError, SingularRegionError
from engine.numerics.polynomials import RationalPoly, poly_int_poly, square_shift_form
from engine.numerics.series import FormalSeries, fps_cosh_sinh, fps_exp
from engine.uniform.maps import map_ztilde

logger = logging.getLogger(__name__)

S_MAX = 16
N_NODES = 2000
DIRECT_GUARD = 0.05

E1 = RationalPoly((0, Fraction(-6, 24), 0, Fraction(5, 24)))
A_SEED = Fraction(5, 72)
ATILDE_SEED = Fraction(-7, 72)


@lru_cache(maxsize=None)
def generate_e_polys(count: int) -> tuple[RationalPoly, ...]:
    """
    E_1..E_count from E_1(beta) = beta (5 beta^2 - 6) / 24 and

        E_{s+1} = (beta^2 - 1)^2 E_s' / 2
                  + (1/2) integral_{sigma(s)}^{beta} (p^2 - 1)^2 sum_{j=1}^{s-1} E_j' E_{s-j}' dp

    with sigma(s) = 1 for odd s and 0 for even s.
    """
    square = RationalPoly((-1, 0, 1)) * RationalPoly((-1, 0, 1))
    polys = [E1]
    derivs = [E1.derivative()]
    half = Fraction(1, 2)
    for s in range(1, count):
        conv = RationalPoly()
        for j in range(1, s // 2 + 1):
            k = s - j
            if k < j:
                break
            term = derivs[j - 1] * derivs[k - 1]
            conv = conv + (term if j == k else term * 2)
        lower = 1 if s % 2 == 1 else 0
        nxt = square * derivs[s - 1] * half
        if conv.coeffs:
            nxt = nxt + poly_int_poly(square * conv, lower) * half
        polys.append(nxt)
        derivs.append(nxt.derivative())
    return tuple(polys)


@lru_cache(maxsize=None)
def ratio_sequence(seed: Fraction, count: int) -> tuple[Fraction, ...]:
    """
    b_1..b_count with b_1 = b_2 = seed and

        b_{s+1} = (s + 1) b_s / 2 + (1/2) sum_{j=1}^{s-1} b_j b_{s-j},   s >= 2.
    """
    seq = [seed, seed]
    for s in range(2, count):
        conv = sum((seq[j - 1] * seq[s - j - 1] for j in range(1, s)), Fraction(0))
        seq.append(Fraction(s + 1, 2) * seq[s - 1] + conv / 2)
    return tuple(seq[:count])


@dataclass(frozen=True, eq=False)
class CoeffTables:
    """
    Generated polynomials and sequences plus the contour table.

    Attributes:
        e_polys: E_1..E_{2 s_max + 1}
        a_seq: a_1..a_{2 s_max + 1}
        atilde_seq: a~_1..a~_{2 s_max + 1}
        contour_nodes: N points on |t - 1| = 1
        ahat_vals: (N, s_max + 1) array of Ahat_s(t_k)
        bhat_vals: (N, s_max + 1) array of Bhat_s(t_k)
        s_max: Highest coefficient index

    Invariants:
        - a_1 = a_2 = 5/72 and a~_1 = a~_2 = -7/72
        - E_{2s} is even, E_{2s+1} is odd, E_{2s}(+-1) = 0
    """

    e_polys: tuple[RationalPoly, ...]
    a_seq: tuple[Fraction, ...]
    atilde_seq: tuple[Fraction, ...]
    contour_nodes: np.ndarray
    ahat_vals: np.ndarray
    bhat_vals: np.ndarray
    s_max: int = S_MAX
    e_float: tuple[np.ndarray, ...] = field(init=False, repr=False)
    e_shifted: tuple[tuple[int, np.ndarray], ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        """Derive float coefficients once, in beta and in q = beta^2 - 1."""
        object.__setattr__(self, "e_float", tuple(p.to_float() for p in self.e_polys))
        shifted = []
        for poly in self.e_polys:
            parity, in_q = square_shift_form(poly)
            shifted.append((parity, in_q.to_float()))
        object.__setattr__(self, "e_shifted", tuple(shifted))

    @property
    def n_nodes(self) -> int:
        """Number of contour nodes."""
        return int(self.contour_nodes.shape[0])

    @property
    def order(self) -> int:
        """Highest power of v kept in the composed series."""
        return 2 * self.s_max + 1


def contour_nodes(n_nodes: int) -> np.ndarray:
    """t_k = 1 + exp(2 pi i (k + 1/2) / N), k = 0..N-1."""
    k = np.arange(n_nodes)
    return 1.0 + np.exp(2j * math.pi * (k + 0.5) / n_nodes)


def _e_value(beta: np.ndarray, q: np.ndarray, tables: CoeffTables, s: int) -> np.ndarray:
    """
    E_s(beta) in whichever basis, beta or q = beta^2 - 1, has the smaller
    sum of absolute terms at each point.

    The beta form cancels badly once |beta| exceeds about 1, where the q form
    has same-signed terms; near beta = 0 the beta form wins.
    """
    coeffs = tables.e_float[s - 1]
    parity, in_q = tables.e_shifted[s - 1]
    mag_beta = np.abs(beta)
    by_beta = npoly.polyval(beta, coeffs)
    by_q = npoly.polyval(q, in_q) * (beta if parity else 1.0)
    bound_beta = npoly.polyval(mag_beta, np.abs(coeffs))
    bound_q = npoly.polyval(np.abs(q), np.abs(in_q)) * (mag_beta if parity else 1.0)
    return np.where(bound_q < bound_beta, by_q, by_beta)


def _coefficients_batch(
    beta: np.ndarray,
    q: np.ndarray,
    xi: np.ndarray,
    amp_a: np.ndarray,
    amp_b: np.ndarray,
    tables: CoeffTables,
    s_max: int,
) -> tuple[np.ndarray, np.ndarray]:
    """Ahat and Bhat, each of shape (len(beta), s_max + 1); q = beta^2 - 1 = 1 / w^2."""
    order = 2 * s_max + 1
    shape = (order + 1, beta.shape[0])
    cal = np.zeros(shape, dtype=complex)
    cal_t = np.zeros(shape, dtype=complex)
    power = np.ones_like(xi)
    minus_inv_xi = -1.0 / xi
    for s in range(1, order + 1):
        power = power * minus_inv_xi
        e_val = _e_value(beta, q, tables, s)
        cal[s] = e_val + float(tables.a_seq[s - 1]) / s * power
        cal_t[s] = e_val + float(tables.atilde_seq[s - 1]) / s * power

    even = np.zeros(shape, dtype=complex)
    odd = np.zeros(shape, dtype=complex)

    even[2::2], odd[1::2] = cal_t[2::2], cal_t[1::2]
    cosh_t, _ = fps_cosh_sinh(FormalSeries(odd))
    a_coeffs = (fps_exp(FormalSeries(even)) * cosh_t).coeffs[0::2]

    even[2::2], odd[1::2] = cal[2::2], cal[1::2]
    _, sinh_e = fps_cosh_sinh(FormalSeries(odd))
    b_coeffs = (fps_exp(FormalSeries(even)) * sinh_e).coeffs[1::2]

    return (amp_a * a_coeffs).T, (amp_b * b_coeffs).T


def ahat_bhat_at(
    ztilde: complex, tables: CoeffTables, s_max: Optional[int] = None
) -> tuple[list[complex], list[complex]]:
    """
    Ahat_0..Ahat_{s_max} and Bhat_0..Bhat_{s_max} at one point.

    Raises:
        SingularRegionError: If |z~ - 1| < 0.05
        DomainError: If Re z~ < 0 or s_max exceeds the table
    """
    s_max = tables.s_max if s_max is None else s_max
    if s_max > tables.s_max:
        raise DomainError(f"s_max={s_max} exceeds the table's {tables.s_max}")
    zt = complex(ztilde)
    if abs(zt - 1.0) < DIRECT_GUARD:
        raise SingularRegionError(f"z~ = {zt} is too close to the turning point")
    m = map_ztilde(zt)
    ahat, bhat = _coefficients_batch(
        np.array([m.beta]),
        np.array([1.0 / (m.w * m.w)]),
        np.array([m.xi]),
        m.amp_a,
        m.amp_b,
        tables,
        s_max,
    )
    return [complex(v) for v in ahat[0]], [complex(v) for v in bhat[0]]


def build_coeff_tables(s_max: int = S_MAX, n_nodes: int = N_NODES) -> CoeffTables:
    """
    Generate E polynomials and a-sequences exactly, then tabulate Ahat and Bhat
    on the contour |t - 1| = 1.

    Raises:
        DomainError: If s_max is outside 0..16 or n_nodes < 1
    """
    if not 0 <= s_max <= S_MAX:
        raise DomainError(f"s_max must lie in 0..{S_MAX}, got {s_max}")
    if n_nodes < 1:
        raise DomainError(f"n_nodes must be positive, got {n_nodes}")
    base = exact_tables(s_max)
    nodes = contour_nodes(n_nodes)
    maps = [map_ztilde(t) for t in nodes]
    ahat, bhat = _coefficients_batch(
        np.array([m.beta for m in maps]),
        np.array([1.0 / (m.w * m.w) for m in maps]),
        np.array([m.xi for m in maps]),
        np.array([m.amp_a for m in maps]),
        np.array([m.amp_b for m in maps]),
        base,
        s_max,
    )
    logger.debug("tabulated coefficients on %d contour nodes", n_nodes)
    return with_contour(base, nodes, ahat, bhat)


def with_contour(
    tables: CoeffTables, nodes: np.ndarray, ahat: np.ndarray, bhat: np.ndarray
) -> CoeffTables:
    """Return tables carrying the given contour table (immutable update)."""
    return replace(tables, contour_nodes=nodes, ahat_vals=ahat, bhat_vals=bhat)


def exact_tables(s_max: int = S_MAX) -> CoeffTables:
    """
    Tables holding only the exact polynomials and sequences (empty contour).

    Raises:
        DomainError: If s_max is outside 0..16
    """
    if not 0 <= s_max <= S_MAX:
        raise DomainError(f"s_max must lie in 0..{S_MAX}, got {s_max}")
    order = 2 * s_max + 1
    logger.debug("generating %d E polynomials and a-sequences", order)
    return CoeffTables(
        e_polys=generate_e_polys(order),
        a_seq=ratio_sequence(A_SEED, order),
        atilde_seq=ratio_sequence(ATILDE_SEED, order),
        contour_nodes=np.zeros(0, dtype=complex),
        ahat_vals=np.zeros((0, s_max + 1), dtype=complex),
        bhat_vals=np.zeros((0, s_max + 1), dtype=complex),
        s_max=s_max,
    )
