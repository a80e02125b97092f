"""Exception hierarchy shared by every subpackage."""


class SatakeError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(SatakeError, ValueError):
    pass


class WeightMismatch(SatakeError, ValueError):
    pass


class NotDominant(SatakeError, ValueError):
    """A coweight was built from a vector that is not weakly decreasing."""


class InternalInconsistency(SatakeError, ArithmeticError):
    """An exact division left a remainder; this is a bug, not bad input."""


class NormalizationFailure(SatakeError, ArithmeticError):
    pass


class NotInImage(SatakeError, ValueError):
    pass


class InsufficientPrecision(SatakeError, ArithmeticError):
    pass


class DivisionByZero(SatakeError, ZeroDivisionError):
    pass


class NotRegular(SatakeError, ValueError):
    pass


class WindowUnstable(SatakeError, RuntimeError):
    def __init__(self, message, counts_n=None, counts_n1=None, window=None):
        super().__init__(message)
        self.counts_n = counts_n
        self.counts_n1 = counts_n1
        self.window = window


class HypothesisViolated(SatakeError, ValueError):
    pass
