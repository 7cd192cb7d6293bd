"""Exception hierarchy.

Every data problem raises a :class:`ValidationError` subclass named after the
violated rule; errors carry an optional ``path`` locating the offending value
(e.g. ``"A1/C2/truth[2]"``) so CLI output can point at the exact matrix cell.
"""

from __future__ import annotations


class NeutrorefError(Exception):
    """Base class for all errors raised by this library."""


class ValidationError(NeutrorefError, ValueError):
    """Input data violates a structural invariant."""

    def __init__(self, message: str, *, path: str | None = None):
        self.bare_message = message
        self.path = path
        super().__init__(message if path is None else f"{path}: {message}")

    def at(self, prefix: str) -> "ValidationError":
        """Copy of this error with ``prefix`` prepended to its location."""
        path = prefix if self.path is None else f"{prefix}/{self.path}"
        return type(self)(self.bare_message, path=path)


class RangeViolation(ValidationError):
    """A membership degree lies outside [0, 1], or a triple sum exceeds 3."""


class IntervalInversion(ValidationError):
    """An interval's lower endpoint exceeds its upper endpoint."""


class DimensionMismatch(ValidationError):
    """Membership sequences are ragged or sets disagree on dimension p."""


class DuplicateLabel(ValidationError):
    """A universe / alternative / criterion label occurs more than once."""


class FlavorMismatch(ValidationError):
    """An operation received a set of the wrong flavor (SVNR vs INR)."""


class UniverseMismatch(ValidationError):
    """Two sets are defined over different universes (labels or order)."""


class WeightError(ValidationError):
    """Weights are negative, of the wrong length, or do not sum to 1."""


class SchemaError(ValidationError):
    """A problem/set document is malformed or missing required fields."""


class UndefinedSimilarity(NeutrorefError, ZeroDivisionError):
    """Similarity is undefined: some slot is all-zero in both operands."""

    def __init__(self, message: str, *, path: str | None = None):
        self.bare_message = message
        self.path = path
        super().__init__(message if path is None else f"{path}: {message}")
