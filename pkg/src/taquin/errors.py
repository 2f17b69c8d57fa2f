"""Exception types shared across the package."""


class TaquinError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(TaquinError, ValueError):
    """A sequence does not describe a valid shape, or shapes are incompatible."""


class TableauError(TaquinError, ValueError):
    """A chain of shapes does not describe a valid tableau."""


class BorderMismatchError(TaquinError, ValueError):
    """Two tableaux that must share a border do not."""


class ParameterError(TaquinError, ValueError):
    """A bounding parameter (row count, column bound) is violated or missing."""


class NotComputableError(TaquinError):
    """The requested value is not determined by the available finite data."""


class SearchExhaustedError(TaquinError):
    """A bounded search finished without finding the object it looked for."""


class ParseError(TaquinError, ValueError):
    """Text input could not be parsed."""

    def __init__(self, message, position=None):
        if position is not None:
            message = "%s (at position %d)" % (message, position)
        super().__init__(message)
        self.position = position
