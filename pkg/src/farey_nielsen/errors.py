class FareyNielsenError(ValueError):
    """Base class for all errors raised by this package."""


class NonUnimodular(FareyNielsenError):
    pass


class ZeroVector(FareyNielsenError):
    pass


class NotAdjacent(FareyNielsenError):
    pass


class DegenerateTurn(FareyNielsenError):
    pass


class PointOnEdge(FareyNielsenError):
    pass


class BudgetExceeded(FareyNielsenError):
    pass


class TurningTooSmall(FareyNielsenError):
    pass


class NotHyperbolic(FareyNielsenError):
    pass


class NotInSA(FareyNielsenError):
    pass


class NotTwoGenerated(FareyNielsenError):
    pass


class CentralInput(FareyNielsenError):
    pass


class NotGenerating(FareyNielsenError):
    pass


class UnsupportedForm(FareyNielsenError):
    pass


class RangeEmpty(FareyNielsenError):
    pass


class DepthOverflow(FareyNielsenError):
    pass


class InvariantViolation(RuntimeError):
    """An internal consistency check between two independent routes failed."""
