"""
Exception Hierarchy for pcfu

Every failure the engine reports is a subclass of PCFError so callers can
catch the whole family at once. The subclasses also inherit the closest
builtin exception, which keeps ``except ValueError`` style handling working
for code that does not know about this package.

Design Decisions:
    - Hard failures (bad arguments, poles, overflow) raise
    - Soft failures (slow quadrature, series at its term cap) do not raise;
      they come back as flags on the result records
    - The CLI maps each class to one exit code, see cli.main
"""


class PCFError(Exception):
    """Base class for all errors raised by the engine."""


class DomainError(PCFError, ValueError):
    """An argument lies outside the domain an operation supports."""


class PoleError(DomainError):
    """Gamma-type function evaluated at a non-positive integer."""


class RangeOverflowError(PCFError, OverflowError):
    """A result does not fit in double precision."""


class PreconditionError(PCFError, ValueError):
    """A formal-series operation was given a series it cannot handle."""


class SingularRegionError(DomainError):
    """
    The point sits where the chosen formula is numerically singular.

    Raised near the turning point for the direct coefficient path, for
    points outside the Cauchy contour, and for the degenerate saddle.
    """


class NonConvergenceError(PCFError, ArithmeticError):
    """A computation that must converge did not."""
