"""Exception types shared across the package."""

__all__ = [
    "RndsError",
    "DomainError",
    "InvalidParametersError",
    "HorizonIncidenceError",
    "ExcludedRegionError",
    "ConsistencyError",
]


class RndsError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(RndsError, ValueError):
    """An input lies outside the mathematical domain of the operation."""


class InvalidParametersError(DomainError):
    """Black hole parameters violate the standing assumptions M>0, Q!=0, Lambda>0."""


class HorizonIncidenceError(DomainError):
    """A chart operation was requested at a radius where that chart is singular.

    Carries ``suggested_chart`` naming a chart that stays regular there.
    """

    def __init__(self, message, suggested_chart=None):
        super().__init__(message)
        self.suggested_chart = suggested_chart


class ExcludedRegionError(DomainError):
    """A point of the conformal plane falls in a removed block or on its boundary."""

    def __init__(self, message, boundary=None):
        super().__init__(message)
        # one of None, "singularity", "scri" for points on a removed-square edge
        self.boundary = boundary


class ConsistencyError(RndsError):
    """An internal cross-check failed; indicates a bug or pathological input."""
