"""
Core Data Models for pcfu

This module defines the canonical data structures shared across the engine:
- MethodTag: Which evaluation method produced a value
- EvalFlag: Conditions worth reporting alongside a value
- EvalOptions: Per-call evaluation settings
- EvalResult: A value of U(a,z) with provenance and an error estimate
- SweepConfig / SweepReport: Input and output of the recurrence sweep
- GridSpec / AgreementRow: Grid maps written by the CLI
- OutputRecord: One CSV/JSON row of CLI output

These models are designed to be:
- Immutable where possible (using frozen dataclasses)
- Serializable to CSV and JSON without loss (floats go through repr)
- Clear in their semantic meaning
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional

from engine.config import DEFAULT_TOL
from engine.errors import DomainError


class MethodTag(Enum):
    """
    Evaluation method of U(a,z).

    States:
        MACLAURIN: Power series about z = 0
        INTEGRAL: Trapezoidal rule on a steepest-descent-like contour
        AIRY: Uniform expansion in Airy functions, |a| large
        POINCARE: Large-|z| asymptotic expansion
        CONNECTION: Left half-plane value composed from two principal-domain values
    """

    MACLAURIN = "maclaurin"
    INTEGRAL = "integral"
    AIRY = "airy"
    POINCARE = "poincare"
    CONNECTION = "connection"


class EvalFlag(Enum):
    """
    Diagnostic conditions attached to an EvalResult.

    States:
        NEAR_ZERO_OF_U: The connection formula cancelled by more than a factor 10
        GAMMA_POLE_HANDLED: 1/Gamma(a+1/2) was exactly zero in the connection formula
        QUADRATURE_WEAK: Trapezoidal refinement hit its level cap
        SERIES_WEAK: A series or asymptotic sum hit its term cap
    """

    NEAR_ZERO_OF_U = "near_zero_of_u"
    GAMMA_POLE_HANDLED = "gamma_pole_handled"
    QUADRATURE_WEAK = "quadrature_weak"
    SERIES_WEAK = "series_weak"


class SweepDomain(Enum):
    """Argument range sampled by the recurrence sweep."""

    PRINCIPAL = "principal"
    FULL = "full"


@dataclass(frozen=True)
class EvalOptions:
    """
    Settings for one evaluation of U(a,z).

    Attributes:
        tol: Relative tolerance handed to series and quadrature stopping rules
        method: Force a method in the principal domain; None selects automatically
        use_maclaurin: Allow the Maclaurin fast path for |z| <= 3, |a| <= 10
        airy_threshold: Airy-type expansion is used for |a| above this value

    Invariants:
        - 0 < tol < 1
        - airy_threshold >= 10 (the expansion needs u = 2|a| >= 20)
    """

    tol: float = DEFAULT_TOL
    method: Optional[MethodTag] = None
    use_maclaurin: bool = True
    airy_threshold: float = 20.0

    def __post_init__(self) -> None:
        """Validate invariants after initialization."""
        if not 0.0 < self.tol < 1.0:
            raise DomainError(f"tol must lie in (0, 1), got {self.tol}")
        if self.airy_threshold < 10.0:
            raise DomainError(f"airy_threshold must be >= 10, got {self.airy_threshold}")


@dataclass(frozen=True)
class EvalResult:
    """
    A value of U(a,z) together with how it was obtained.

    Attributes:
        value: The complex value U(a,z)
        method: Method that produced the value (CONNECTION for composites)
        est_error: Estimated relative error
        flags: Diagnostic conditions met during evaluation
        components: Methods used for the parts of a composite evaluation

    Invariants:
        - est_error >= 0
        - components is empty unless method is CONNECTION
    """

    value: complex
    method: MethodTag
    est_error: float
    flags: frozenset[EvalFlag] = frozenset()
    components: tuple[MethodTag, ...] = ()

    def __post_init__(self) -> None:
        """Validate invariants after initialization."""
        if self.est_error < 0.0:
            raise ValueError(f"est_error must be non-negative, got {self.est_error}")

    @property
    def is_flagged(self) -> bool:
        """True when any diagnostic flag is set."""
        return bool(self.flags)

    def with_value(self, value: complex) -> "EvalResult":
        """Return a copy carrying a different value (immutable update)."""
        return EvalResult(value, self.method, self.est_error, self.flags, self.components)


@dataclass(frozen=True)
class OutputRecord:
    """
    One row of CLI output.

    Floats are written with repr, which round-trips every double exactly.

    Attributes:
        a: Order parameter
        z: Argument
        value: U(a,z)
        method: Method tag value
        est_error: Estimated relative error
        flags: Sorted flag values
    """

    a: float
    z: complex
    value: complex
    method: str
    est_error: float
    flags: tuple[str, ...] = ()

    FIELDS = ("a", "z_re", "z_im", "u_re", "u_im", "method", "est_error", "flags")

    @classmethod
    def from_result(cls, a: float, z: complex, result: EvalResult) -> "OutputRecord":
        """Create a record from an evaluation result."""
        return cls(
            a=a,
            z=z,
            value=result.value,
            method=result.method.value,
            est_error=result.est_error,
            flags=tuple(sorted(flag.value for flag in result.flags)),
        )

    def as_row(self) -> dict[str, str]:
        """Return the record as strings keyed by FIELDS."""
        return {
            "a": repr(float(self.a)),
            "z_re": repr(self.z.real),
            "z_im": repr(self.z.imag),
            "u_re": repr(self.value.real),
            "u_im": repr(self.value.imag),
            "method": self.method,
            "est_error": repr(self.est_error),
            "flags": ";".join(self.flags),
        }

    def as_json(self) -> dict[str, object]:
        """Return the record keyed by FIELDS with numbers kept as floats."""
        return {
            "a": float(self.a),
            "z_re": self.z.real,
            "z_im": self.z.imag,
            "u_re": self.value.real,
            "u_im": self.value.imag,
            "method": self.method,
            "est_error": self.est_error,
            "flags": list(self.flags),
        }


@dataclass(frozen=True)
class SweepConfig:
    """
    Parameters of a seeded recurrence sweep.

    Attributes:
        n_samples: Number of random (a, z) points
        seed: Seed of the PCG64 generator
        a_range: Closed interval sampled uniformly for a
        z_abs_range: Interval sampled uniformly for |z|
        domain: PRINCIPAL samples arg z in [0, pi/2], FULL in (-pi, pi]
        method_override: Evaluate every point with this method instead of dispatching
        worst_k: How many of the largest residuals to keep

    Invariants:
        - n_samples >= 1
        - ranges are ordered and |z| >= 0
    """

    n_samples: int = 100_000
    seed: int = 0
    a_range: tuple[float, float] = (-30.0, 30.0)
    z_abs_range: tuple[float, float] = (0.0, 30.0)
    domain: SweepDomain = SweepDomain.PRINCIPAL
    method_override: Optional[MethodTag] = None
    worst_k: int = 10

    def __post_init__(self) -> None:
        """Validate invariants after initialization."""
        if self.n_samples < 1:
            raise DomainError(f"n_samples must be >= 1, got {self.n_samples}")
        if self.a_range[0] > self.a_range[1]:
            raise DomainError(f"a_range is not ordered: {self.a_range}")
        lo, hi = self.z_abs_range
        if lo < 0.0 or lo > hi:
            raise DomainError(f"z_abs_range must satisfy 0 <= lo <= hi: {self.z_abs_range}")


@dataclass(frozen=True)
class WorstPoint:
    """A sample point with its recurrence residual."""

    a: float
    z: complex
    residual: float
    method: str
    flags: tuple[str, ...] = ()


@dataclass
class SweepReport:
    """
    Summary of a recurrence sweep.

    Attributes:
        n_samples: Points sampled
        max_residual: Largest residual over unflagged points
        quantiles: Residual quantiles keyed by percentile (50, 99, 99.9)
        frac_above: Fraction of unflagged points with residual above `threshold`
        threshold: Reference level for frac_above
        worst_points: Unflagged points with the largest residuals, worst first
        flagged_points: Points that carried diagnostic flags, reported separately
        failures: Points whose evaluation raised, as (a, z, message)
        method_counts: How many central evaluations each method produced
    """

    n_samples: int
    max_residual: float = 0.0
    quantiles: dict[float, float] = field(default_factory=dict)
    frac_above: float = 0.0
    threshold: float = 5e-14
    worst_points: list[WorstPoint] = field(default_factory=list)
    flagged_points: list[WorstPoint] = field(default_factory=list)
    failures: list[tuple[float, complex, str]] = field(default_factory=list)
    method_counts: dict[str, int] = field(default_factory=dict)

    def passed(self, limit: float = 5e-13) -> bool:
        """True when no point failed and the largest residual is within limit."""
        return not self.failures and self.max_residual <= limit


@dataclass(frozen=True)
class GridSpec:
    """
    Rectangular (a, |z|) grid with a fixed argument of z.

    Attributes:
        a_min, a_max, na: Inclusive range and count for a
        z_min, z_max, nz: Inclusive range and count for |z|
        arg: Argument of every z on the grid

    Invariants:
        - na >= 1 and nz >= 1
        - z_min >= 0
    """

    a_min: float
    a_max: float
    na: int
    z_min: float
    z_max: float
    nz: int
    arg: float = 0.0

    def __post_init__(self) -> None:
        """Validate invariants after initialization."""
        if self.na < 1 or self.nz < 1:
            raise DomainError(f"grid counts must be >= 1, got na={self.na} nz={self.nz}")
        if self.z_min < 0.0 or self.z_min > self.z_max or self.a_min > self.a_max:
            raise DomainError("grid ranges must be ordered with z_min >= 0")

    @classmethod
    def parse(cls, text: str, arg: float = 0.0) -> "GridSpec":
        """
        Parse "a_min,a_max,na:z_min,z_max,nz".

        Raises:
            DomainError: If the text does not have that shape
        """
        try:
            a_part, z_part = text.split(":")
            a_min, a_max, na = a_part.split(",")
            z_min, z_max, nz = z_part.split(",")
            return cls(
                float(a_min), float(a_max), int(na), float(z_min), float(z_max), int(nz), arg
            )
        except ValueError as exc:
            if isinstance(exc, DomainError):
                raise
            raise DomainError(f"malformed grid '{text}': expected a0,a1,na:z0,z1,nz") from exc

    @staticmethod
    def _axis(lo: float, hi: float, n: int) -> list[float]:
        if n == 1:
            return [lo]
        step = (hi - lo) / (n - 1)
        return [lo + i * step for i in range(n)]

    def points(self) -> Iterator[tuple[float, complex]]:
        """Yield (a, z) pairs, a varying slowest."""
        phase = complex(math.cos(self.arg), math.sin(self.arg))
        for a in self._axis(self.a_min, self.a_max, self.na):
            for r in self._axis(self.z_min, self.z_max, self.nz):
                yield a, r * phase

    @property
    def size(self) -> int:
        """Number of grid points."""
        return self.na * self.nz


@dataclass(frozen=True)
class AgreementRow:
    """Relative difference between two methods at one point."""

    a: float
    z: complex
    reldiff: float
    tag1: str
    tag2: str

    FIELDS = ("a", "z_re", "z_im", "reldiff", "tag1", "tag2")

    def as_row(self) -> dict[str, str]:
        """Return the row as strings keyed by FIELDS."""
        return {
            "a": repr(float(self.a)),
            "z_re": repr(self.z.real),
            "z_im": repr(self.z.imag),
            "reldiff": repr(self.reldiff),
            "tag1": self.tag1,
            "tag2": self.tag2,
        }
