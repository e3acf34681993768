"""Shared exception types."""


class LpaError(Exception):
    """Base class for all domain errors raised by this package."""


class GraphError(LpaError):
    """Malformed graph description (syntax or dangling/duplicate identifiers)."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ExprError(LpaError):
    """Malformed element, trail or vector expression."""


class MismatchError(LpaError):
    """Operands live over different graphs or different coefficient rings."""


class UndecidedError(LpaError):
    """A comparison against a continuous trail exceeded its prefix bound.

    Raised loudly instead of returning a silent default; callers that can
    tolerate it must catch it explicitly.
    """


class SystemError_(LpaError):
    """Invalid Cuntz-Krieger system file or assignment."""
