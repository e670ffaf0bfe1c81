"""Exception types raised across the package."""


class K3EnumError(ValueError):
    """Base class for all errors raised by k3enum."""


class InsufficientTruncation(K3EnumError):
    """A coefficient was requested beyond the known precision of a series."""


class ZeroLeadingCoefficient(K3EnumError):
    pass


class NonzeroConstantTerm(K3EnumError):
    pass


class NonInvertibleLeading(K3EnumError):
    pass


class OutOfRange(K3EnumError):
    pass


class NotCoprime(K3EnumError):
    pass


class BasisChangeResidual(K3EnumError):
    """A Laurent polynomial in y is not a combination of powers of y - 2 + 1/y."""


class DivisionByZeroDegree(K3EnumError):
    pass
