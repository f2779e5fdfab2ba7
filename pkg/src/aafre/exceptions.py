"""Exception hierarchy for the solver."""


class AAFREError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(AAFREError, ValueError):
    """An argument lies outside the domain where an operation is defined."""


class DimensionError(AAFREError, ValueError):
    """Vector or matrix shapes do not agree."""


class SelectionError(AAFREError, ValueError):
    """A selected column does not belong to the equation's index set."""


class EmptySelectionError(SelectionError):
    """Some equation has no admissible column, so no selection exists."""


class InfeasibleError(AAFREError):
    """The operation requires a nonempty feasible region."""


class SizeError(AAFREError):
    """An enumeration would exceed the configured limit."""


class FitError(AAFREError):
    """The exponent fit is underdetermined or does not reach the target accuracy."""


class ParseError(AAFREError, ValueError):
    """An instance document is malformed."""

    def __init__(self, message, location=None):
        self.location = location
        if location is not None:
            message = f"{location}: {message}"
        super().__init__(message)


class ValidationError(ParseError):
    """An instance document is well formed but violates a range or shape rule."""
