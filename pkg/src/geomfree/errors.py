"""Exception types shared across the kernel."""


class GeomfreeError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(GeomfreeError):
    """Argument outside the range for which results can be certified."""


class InvalidTolerance(GeomfreeError):
    """Tolerance is zero, negative, NaN, or below the supported floor."""


class ToleranceTooTight(GeomfreeError):
    """Exact sign certification would exceed the internal degree budget."""


class StepTooLarge(GeomfreeError):
    """ODE step size outside the range where the error model applies."""


class UnknownIdentity(GeomfreeError):
    """Requested identity name is not registered."""
