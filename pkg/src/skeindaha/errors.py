"""Exceptions shared across the package."""


class SkeindahaError(Exception):
    """Base class for all library errors."""


class ZeroDivisorError(SkeindahaError, ZeroDivisionError):
    """Division by an exact zero."""


class ContextMismatchError(SkeindahaError):
    """Two values from different variable contexts were combined."""


class NonSquareError(SkeindahaError):
    """Square root requested of something that is not a perfect square."""


class NonUnitError(SkeindahaError):
    """A unit (scalar times a single word) was required."""


class ParseError(SkeindahaError):
    """Malformed textual input; carries the offending position."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
