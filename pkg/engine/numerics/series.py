"""
Truncated Formal Power Series

A FormalSeries holds the coefficients c_0..c_K of sum c_k v^k. Coefficients
are numpy arrays whose first axis is the power of v; any trailing axes are a
batch, so one series object can carry the same expansion at many points
(the contour table evaluates 2000 nodes at once this way).

Design Decisions:
    - Arithmetic between series of different order truncates to the smaller one
    - exp uses the recurrence n e_n = sum_k k s_k e_{n-k}, O(K^2)
    - cosh and sinh are built from exp(s) and exp(-s), whose odd parts are exact negatives

Academic Context:
    Input: Coefficient arrays of equal batch shape
    Transformation: Cauchy products and exponential recurrences
    Output: New truncated series of the same batch shape
    Limitation: No division or composition; none is needed here
"""

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from engine.errors import PreconditionError

Scalar = Union[int, float, complex]


@dataclass(frozen=True, eq=False)
class FormalSeries:
    """
    Power series in v truncated after v^K.

    Attributes:
        coeffs: Complex array of shape (K + 1, *batch)

    Invariants:
        - coeffs has at least one row
        - order == K == coeffs.shape[0] - 1
    """

    coeffs: np.ndarray

    def __post_init__(self) -> None:
        """Coerce to a complex array and validate shape."""
        arr = np.asarray(self.coeffs, dtype=complex)
        if arr.ndim == 0 or arr.shape[0] == 0:
            raise ValueError("a formal series needs at least one coefficient")
        object.__setattr__(self, "coeffs", arr)

    @classmethod
    def from_terms(cls, terms: Sequence, order: int) -> "FormalSeries":
        """
        Build a series from its leading terms, padding with zeros up to order.

        Each term may be a scalar or an array of the batch shape.
        """
        rows = [np.asarray(t, dtype=complex) for t in terms[: order + 1]]
        batch = np.broadcast_shapes(*(r.shape for r in rows)) if rows else ()
        out = np.zeros((order + 1, *batch), dtype=complex)
        for k, row in enumerate(rows):
            out[k] = row
        return cls(out)

    @property
    def order(self) -> int:
        """Highest retained power K."""
        return self.coeffs.shape[0] - 1

    def coefficient(self, k: int) -> np.ndarray:
        """Coefficient of v^k (zero beyond the order)."""
        if k > self.order:
            return np.zeros(self.coeffs.shape[1:], dtype=complex)
        return self.coeffs[k]

    def truncate(self, order: int) -> "FormalSeries":
        """Drop powers above `order`."""
        return FormalSeries(self.coeffs[: order + 1])

    def _aligned(self, other: "FormalSeries") -> tuple[np.ndarray, np.ndarray]:
        k = min(self.order, other.order)
        return self.coeffs[: k + 1], other.coeffs[: k + 1]

    def __add__(self, other: Union["FormalSeries", Scalar]) -> "FormalSeries":
        if isinstance(other, FormalSeries):
            a, b = self._aligned(other)
            return FormalSeries(a + b)
        out = self.coeffs.copy()
        out[0] = out[0] + other
        return FormalSeries(out)

    __radd__ = __add__

    def __neg__(self) -> "FormalSeries":
        return FormalSeries(-self.coeffs)

    def __sub__(self, other: Union["FormalSeries", Scalar]) -> "FormalSeries":
        return self + (-other)

    def __mul__(self, other: Union["FormalSeries", Scalar, np.ndarray]) -> "FormalSeries":
        if not isinstance(other, FormalSeries):
            return FormalSeries(self.coeffs * other)
        a, b = self._aligned(other)
        out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=complex)
        for n in range(out.shape[0]):
            for k in range(n + 1):
                out[n] += a[k] * b[n - k]
        return FormalSeries(out)

    __rmul__ = __mul__


def fps_exp(series: FormalSeries) -> FormalSeries:
    """
    exp of a series with zero constant term.

    Raises:
        PreconditionError: If the constant term is not zero
    """
    s = series.coeffs
    if np.any(s[0] != 0):
        raise PreconditionError("fps_exp needs a series with zero constant term")
    out = np.zeros_like(s)
    out[0] = 1.0
    for n in range(1, s.shape[0]):
        acc = np.zeros(s.shape[1:], dtype=complex)
        for k in range(1, n + 1):
            acc += k * s[k] * out[n - k]
        out[n] = acc / n
    return FormalSeries(out)


def fps_cosh_sinh(series: FormalSeries) -> tuple[FormalSeries, FormalSeries]:
    """
    cosh and sinh of a series with zero constant term.

    Raises:
        PreconditionError: If the constant term is not zero
    """
    plus = fps_exp(series)
    minus = fps_exp(-series)
    return FormalSeries(0.5 * (plus.coeffs + minus.coeffs)), FormalSeries(
        0.5 * (plus.coeffs - minus.coeffs)
    )
