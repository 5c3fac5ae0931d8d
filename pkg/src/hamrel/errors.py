"""Exception hierarchy.

Every error carries a short stable ``code`` that the CLI prints as a
one-line diagnostic, so scripts can match on it.
"""


class HamrelError(Exception):
    """Base class for all package errors."""

    code = "error"


class DomainError(HamrelError, ValueError):
    """Argument outside the mathematical domain of an operation."""

    code = "domain-error"


class InvalidVectorError(HamrelError, ValueError):
    """Coefficient vector violates its structural invariants."""

    code = "invalid-vector"


class DegenerateDimensionsError(HamrelError, ValueError):
    """Network too thin for a cubic fit (n - w - l < 2)."""

    code = "degenerate-dims"


class SingularSystemError(HamrelError, ArithmeticError):
    """Linear system is singular or too ill-conditioned to trust."""

    code = "singular-system"


class InvalidBridgePointError(HamrelError, ValueError):
    """Bridge abscissa outside the admissible interval."""

    code = "invalid-bridge-point"


class InconsistentAnchorsError(HamrelError, ValueError):
    """Anchor coefficients violate ordering or binomial ceilings."""

    code = "inconsistent-anchors"


class EnumerationCapError(HamrelError, ValueError):
    """Graph too large for exhaustive counting."""

    code = "cap-exceeded"


class GraphFormatError(HamrelError, ValueError):
    """Malformed graph description (file or inline)."""

    code = "bad-graph-file"
