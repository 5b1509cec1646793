"""Exception hierarchy shared by every qmads module."""

from __future__ import annotations


class QmadsError(Exception):
    """Base class for all library errors."""


class PoleError(QmadsError, ZeroDivisionError):
    """A denominator vanished under specialization (or a zero was inverted)."""


class GenericityError(QmadsError):
    """q was specialized to 0, 1 or -1."""


class ParseError(QmadsError, ValueError):
    pass


class ArityError(QmadsError, ValueError):
    pass


class PositionError(QmadsError, ValueError):
    pass


class InversionError(QmadsError):
    pass


class NotYangBaxter(QmadsError):
    """The braid relation fails; ``residual`` maps (row, col) index pairs to nonzero entries."""

    def __init__(self, residual):
        self.residual = residual
        sample = ", ".join(f"{k}: {v}" for k, v in list(residual.items())[:4])
        super().__init__(f"braid relation residual has {len(residual)} nonzero entries ({sample})")


class NotSymmetry(QmadsError):
    pass


class NotSkewInvertible(QmadsError):
    pass


class BirankError(QmadsError):
    pass


class ResourceError(QmadsError):
    def __init__(self, message: str, dimension: int | None = None):
        self.dimension = dimension
        super().__init__(message)


class NormalizationError(QmadsError):
    pass


class InsufficientTruncation(QmadsError):
    pass


class ZeroVector(QmadsError, ValueError):
    pass
