"""Exception hierarchy shared by all modules."""


class AxialError(Exception):
    """Base class for every error raised by this package."""


# field
class ZeroDenominator(AxialError, ZeroDivisionError):
    pass


class DivisionByZero(AxialError, ZeroDivisionError):
    pass


class DenominatorVanishes(AxialError, ZeroDivisionError):
    pass


class OmegaUnevaluable(AxialError, ValueError):
    pass


class ModeMismatch(AxialError, TypeError):
    """Plain and omega-extended scalars were combined."""


class ParseError(AxialError, ValueError):
    pass


# linalg
class AmbientMismatch(AxialError, ValueError):
    pass


class DimMismatch(AxialError, ValueError):
    pass


# fusion
class DuplicateEigenvalue(AxialError, ValueError):
    pass


class UnsupportedDivisor(AxialError, ValueError):
    pass


# algebra
class IncompleteDecomposition(AxialError, ValueError):
    pass


class NotPrimitive(AxialError, ValueError):
    pass


class NotAnIdeal(AxialError, ValueError):
    pass


class NotSpecialized(AxialError, ValueError):
    pass


# catalog
class BadParameter(AxialError, ValueError):
    pass


class WrongDimension(AxialError, ValueError):
    pass


class ConstraintUnsatisfied(AxialError, ValueError):
    pass
