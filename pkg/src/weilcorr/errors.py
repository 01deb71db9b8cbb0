"""Exception hierarchy.

Everything raised for bad mathematical input derives from
:class:`WeilcorrError`; the CLI maps those to exit status 1.
"""


class WeilcorrError(Exception):
    """Base class for domain errors."""


class OrderMismatch(WeilcorrError, ValueError):
    """Cyclotomic operands live in fields of different order or radicand."""


class DivisionByZero(WeilcorrError, ZeroDivisionError):
    pass


class NotSquarefree(WeilcorrError, ValueError):
    pass


class OutOfRange(WeilcorrError, ValueError):
    pass


class InvalidDivisor(WeilcorrError, ValueError):
    pass


class NormMismatch(WeilcorrError, ValueError):
    pass


class TransporterNotFound(WeilcorrError, LookupError):
    pass


class NotUnimodular(WeilcorrError, ValueError):
    pass


class DivisionByNonUnit(WeilcorrError, ZeroDivisionError):
    pass


class FractionalExponents(WeilcorrError, ValueError):
    pass


class PrecisionError(WeilcorrError, ValueError):
    """A coefficient was requested at or beyond the certified truncation."""


class InsufficientPrecision(PrecisionError):
    pass


class PositiveArgument(WeilcorrError, ValueError):
    pass


class ZeroLValue(WeilcorrError, ArithmeticError):
    pass


class ConditionViolation(WeilcorrError, ValueError):
    """A series fails the sign-vector vanishing condition."""


class UnrealizedClass(WeilcorrError, ValueError):
    pass


class InconsistentComponents(WeilcorrError, ValueError):
    pass


class ConvergenceTooSlow(WeilcorrError, ArithmeticError):
    pass


class NonCuspidalBasis(WeilcorrError, ValueError):
    pass


class UnsupportedCase(WeilcorrError, NotImplementedError):
    pass
