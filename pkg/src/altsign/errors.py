"""Exceptions shared across the package."""


class NonDivisibleError(ArithmeticError):
    """Exact polynomial division failed; carries the offending remainder."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class InvalidShapeError(ValueError):
    """Truncation vectors describe no admissible tree shape."""


class NotInImageError(ValueError):
    """The object is not in the image of the bijection being inverted."""


class OutOfRangeError(ValueError):
    """A statistic parameter lies outside its admissible range."""


class ShapeMismatchError(ValueError):
    """Vector lengths passed to an operator formula are inconsistent."""
