"""Exception hierarchy shared by all qsrg modules."""


class QSRGError(Exception):
    """Base class for every error raised by qsrg."""


class InvalidElement(QSRGError, ValueError):
    pass


class DivisionByZero(QSRGError, ZeroDivisionError):
    pass


class InvalidField(QSRGError, ValueError):
    pass


class InvalidInput(QSRGError, ValueError):
    pass


class AmbientMismatch(QSRGError, ValueError):
    pass


class NotAPoint(QSRGError, ValueError):
    pass


class InvalidIndex(QSRGError, IndexError):
    pass


class BudgetExceeded(QSRGError, RuntimeError):
    """Raised when an enumeration or search exceeds its configured budget.

    ``stats`` carries whatever partial statistics were collected before the
    budget ran out.
    """

    def __init__(self, message, stats=None):
        super().__init__(message)
        self.stats = stats or {}


class InvalidEdge(QSRGError, ValueError):
    pass


class DuplicateEdge(QSRGError, ValueError):
    pass


class NotDivisible(QSRGError, ValueError):
    pass


class OddDimension(QSRGError, ValueError):
    pass


class NotStronglyRegular(QSRGError, ValueError):
    pass


class WrongParameterShape(QSRGError, ValueError):
    pass


class NotPolarity(QSRGError, ValueError):
    pass


class NotSymplectic(QSRGError, ValueError):
    pass
