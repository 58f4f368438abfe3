"""Exception hierarchy shared by every module of the package."""


class PadicError(Exception):
    """Base class for all errors raised by padic_gsm."""


class InvalidInput(PadicError, ValueError):
    pass


class InvalidPrime(InvalidInput):
    pass


class DivisionByZero(PadicError, ZeroDivisionError):
    pass


class PrecisionExhausted(PadicError, ArithmeticError):
    """An answer depends on digits beyond the tracked precision."""


class FieldTooLarge(InvalidInput):
    pass


class ZeroDivisorDetected(PadicError, ArithmeticError):
    """A non-invertible nonzero element turned up: the defining polynomial is reducible."""


class UniformizerNotFound(PadicError):
    pass


class RamificationUndetermined(InvalidInput):
    """(e, f) cannot be read off the Newton data and no hint was supplied."""


class RamificationMismatch(InvalidInput):
    """A supplied (e, f) hint is inconsistent with the field."""


class NotIntegral(PadicError, ValueError):
    pass


class NotNormalized(PadicError, ValueError):
    pass


class NotSquarefree(InvalidInput):
    pass


class NoRootInField(PadicError):
    pass


class DepthExceeded(PadicError):
    pass


class Inconclusive(PadicError):
    pass


class DegenerateSpecialization(InvalidInput):
    pass


class EmbeddingFailed(PadicError):
    pass


class FrontierExplosion(PadicError):
    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class UnsupportedReconstruction(PadicError):
    pass


class SearchError(PadicError):
    """Internal consistency failure during the parameter search."""
