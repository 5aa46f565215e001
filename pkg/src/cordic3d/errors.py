"""Exception types raised by the fixed-point model."""


class CordicError(ValueError):
    """Base class for all model errors."""


class RangeError(CordicError):
    """A value does not fit the 16-bit format, or would overflow the datapath."""


class DomainError(CordicError):
    """An angle lies outside the rotation-mode convergence range."""
