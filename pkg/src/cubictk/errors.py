"""Exceptions raised by cubictk.

Input errors mean the caller handed over something the computation cannot start from. Mathematical failures mean
the computation started but could not produce a certified answer. The command-line front end maps the first to exit
code 2 and the second to exit code 1.
"""


class CubictkError(Exception):
    """Base class for cubictk exceptions."""


class InputError(CubictkError):
    """The input is invalid."""


class ShapeMismatchError(InputError):
    """Homs, group powers or tables do not fit together."""


class HypothesisError(InputError):
    """A congruence or range hypothesis of an operation is not satisfied."""


class IncompleteDataError(InputError):
    """A table or data set lacks entries the operation needs."""


class MathematicalFailure(CubictkError):
    """The computation could not be completed or certified."""


class CertificateMismatchError(MathematicalFailure):
    """The computed result disagrees with its independent certificate."""


class IntegralityError(MathematicalFailure):
    """A value that must be integral is not."""


class UnknownValueError(MathematicalFailure):
    """A value is needed that cannot be computed without an unstated assumption."""


class BudgetExhaustedError(MathematicalFailure):
    """A bounded search ran out of budget."""


class PrecisionError(MathematicalFailure):
    """The requested precision is too low for the operation."""
