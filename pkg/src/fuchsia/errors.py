"""Exception types raised across the package."""


class FuchsiaError(Exception):
    """Base class for all package errors."""


class NonPositiveDeterminant(FuchsiaError, ValueError):
    pass


class IdentityHasAllPoints(FuchsiaError, ValueError):
    pass


class NotHyperbolic(FuchsiaError, ValueError):
    pass


class CoincidentEndpoints(FuchsiaError, ValueError):
    pass


class OverlappingCircles(FuchsiaError, ValueError):
    pass


class InsufficientData(FuchsiaError, ValueError):
    pass


class IndexOutOfRange(FuchsiaError, IndexError):
    pass


class UnknownType(FuchsiaError, ValueError):
    pass


class InvalidWindow(FuchsiaError, ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations) or "invalid window")


class BudgetExceeded(FuchsiaError, RuntimeError):
    pass


class EmptyViewport(FuchsiaError, ValueError):
    pass
