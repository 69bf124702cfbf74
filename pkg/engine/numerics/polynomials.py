"""
Exact Rational Polynomials

The polynomials E_s(beta) of the uniform expansion are generated by a
recursion that mixes derivatives, products and definite integrals. Doing it
in exact rational arithmetic makes the parity and endpoint identities hold
exactly; floats are produced once, when the coefficient tables are built.

Design Decisions:
    - Coefficients are Fractions, lowest power first, trailing zeros stripped
    - Products run on integer numerators over a common denominator, which is
      much faster than multiplying Fractions term by term
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

import numpy as np

Number = Union[int, Fraction]


def _strip(coeffs: Iterable[Number]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class RationalPoly:
    """
    Polynomial with rational coefficients.

    Attributes:
        coeffs: Fractions c_0, c_1, ... for c_0 + c_1 x + ...

    Invariants:
        - The last coefficient is nonzero (the zero polynomial has none)
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        """Normalize coefficients to stripped Fractions."""
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def monomial(cls, power: int, coeff: Number = 1) -> "RationalPoly":
        """coeff * x**power."""
        return cls((0,) * power + (coeff,))

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_even(self) -> bool:
        """True when only even powers occur."""
        return all(c == 0 for c in self.coeffs[1::2])

    @property
    def is_odd(self) -> bool:
        """True when only odd powers occur."""
        return all(c == 0 for c in self.coeffs[0::2])

    def _integer_form(self) -> tuple[int, list[int]]:
        den = math.lcm(*(c.denominator for c in self.coeffs)) if self.coeffs else 1
        return den, [c.numerator * (den // c.denominator) for c in self.coeffs]

    def __add__(self, other: Union["RationalPoly", Number]) -> "RationalPoly":
        if not isinstance(other, RationalPoly):
            other = RationalPoly((other,))
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return RationalPoly(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self) -> "RationalPoly":
        return RationalPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Union["RationalPoly", Number]) -> "RationalPoly":
        return self + (-other)

    def __mul__(self, other: Union["RationalPoly", Number]) -> "RationalPoly":
        if not isinstance(other, RationalPoly):
            factor = Fraction(other)
            return RationalPoly(tuple(c * factor for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return RationalPoly()
        d1, n1 = self._integer_form()
        d2, n2 = other._integer_form()
        prod = [0] * (len(n1) + len(n2) - 1)
        for i, x in enumerate(n1):
            if x:
                for j, y in enumerate(n2):
                    if y:
                        prod[i + j] += x * y
        den = d1 * d2
        return RationalPoly(tuple(Fraction(p, den) for p in prod))

    __rmul__ = __mul__

    def __call__(self, x):
        """Horner evaluation; exact for Fraction or int arguments."""
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "RationalPoly":
        """d/dx."""
        return RationalPoly(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))

    def antiderivative(self) -> "RationalPoly":
        """Antiderivative vanishing at x = 0."""
        return RationalPoly((Fraction(0),) + tuple(c / (k + 1) for k, c in enumerate(self.coeffs)))

    def shift(self, offset: Number) -> "RationalPoly":
        """x -> poly(x + offset), exact."""
        out = [Fraction(0)] * len(self.coeffs)
        for k, c in enumerate(self.coeffs):
            if c:
                for j in range(k + 1):
                    out[j] += c * math.comb(k, j) * Fraction(offset) ** (k - j)
        return RationalPoly(tuple(out))

    def to_float(self) -> np.ndarray:
        """Float64 coefficients, lowest power first."""
        return np.array([float(c) for c in self.coeffs], dtype=float)


def poly_int_poly(poly: RationalPoly, lower: Number) -> RationalPoly:
    """
    Indefinite integral with a fixed lower limit: x -> integral_{lower}^{x} poly(p) dp.

    The result vanishes at x = lower exactly.
    """
    anti = poly.antiderivative()
    return anti - anti(Fraction(lower))


def square_shift_form(poly: RationalPoly) -> tuple[int, RationalPoly]:
    """
    Write a polynomial of one parity as x^p Q(x^2 - 1).

    Returns:
        (p, Q) with p = 0 for even and p = 1 for odd polynomials

    Raises:
        ValueError: If the polynomial mixes even and odd powers
    """
    if poly.is_even:
        parity = 0
    elif poly.is_odd:
        parity = 1
    else:
        raise ValueError("polynomial has mixed parity")
    in_square = RationalPoly(poly.coeffs[parity::2])
    return parity, in_square.shift(1)
