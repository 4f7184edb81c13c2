"""Exception hierarchy shared by every module of the package."""


class GkzError(Exception):
    """Base class for all errors raised by :mod:`gkz`."""


class ZeroInverse(GkzError, ZeroDivisionError):
    pass


class NotSquare(GkzError, ValueError):
    pass


class DimensionMismatch(GkzError, ValueError):
    pass


class FieldMismatch(GkzError, ValueError):
    pass


class NonUnitalAlgebra(GkzError, ValueError):
    pass


class NotAUnit(GkzError, ValueError):
    pass


class CapExceeded(GkzError):
    """An enumeration would exceed the configured size cap."""


class NotAGroup(GkzError, ValueError):
    pass


class NotAnIdeal(GkzError, ValueError):
    pass


class NotCommutative(GkzError, ValueError):
    pass


class NotPrime(GkzError, ValueError):
    pass


class AssociativityViolation(GkzError, ValueError):
    pass


class InternalNonlinear(GkzError, AssertionError):
    """A set that must be a linear subspace is not; always a bug."""


class ContainsUnity(GkzError, ValueError):
    pass


class BadParameter(GkzError, ValueError):
    pass


class ParseError(GkzError, ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}" if line else message)


class ValidationError(GkzError, ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        head = "; ".join(self.violations[:5])
        more = f" (+{len(self.violations) - 5} more)" if len(self.violations) > 5 else ""
        super().__init__(f"algebra axioms violated: {head}{more}")
