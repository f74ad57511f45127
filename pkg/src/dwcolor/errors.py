"""Exception hierarchy shared by every module of the package."""


class DWColorError(Exception):
    """Base class for all errors raised by dwcolor."""


class InvalidOrder(DWColorError, ValueError):
    """The group/field order is not an odd integer >= 3."""


class EvenOrder(InvalidOrder):
    pass


class NonInvertibleDenominator(DWColorError, ArithmeticError):
    """A fractional power of zeta has a denominator sharing a factor with n."""


class IllFormedExpansion(DWColorError, ValueError):
    pass


class ZeroTangle(DWColorError, ValueError):
    pass


class ParseError(DWColorError, ValueError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class SchemaError(DWColorError, ValueError):
    """Malformed planar-diagram JSON."""


class MultiComponentClosure(DWColorError, ValueError):
    pass


class NotAKnot(DWColorError, ValueError):
    pass


class NonIntegerTrace(DWColorError, ArithmeticError):
    pass


class NonIntegerN(DWColorError, ArithmeticError):
    pass


class NotEquivariant(DWColorError, ValueError):
    pass


class BudgetExceeded(DWColorError, RuntimeError):
    pass
