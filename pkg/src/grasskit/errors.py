class GrasskitError(Exception):
    """Base class for all errors raised by grasskit."""


class LoadError(GrasskitError):
    """Malformed or inconsistent input document."""


class ShapeError(GrasskitError):
    """Operands have incompatible dimensions, degrees or fields."""


class PullbackIdentityError(GrasskitError):
    """The symbolic pullback comparison failed for a triple.

    This identity is a theorem; a failure indicates an implementation bug
    and is surfaced as its own fatal error rather than a boolean result.
    """


class ConsistencyError(GrasskitError):
    """Two decision methods returned contradictory verdicts."""

    def __init__(self, message, reports=None):
        super().__init__(message)
        self.reports = reports or []
