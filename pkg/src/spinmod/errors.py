"""Exception types shared across the package.

Every domain error derives from SpinModError, which is itself a ValueError,
so callers can catch either.  The CLI maps these to exit code 1.
"""


class SpinModError(ValueError):
    pass


class MalformedText(SpinModError):
    pass


class NotWeaklyDecreasing(SpinModError):
    pass


class SizeMismatch(SpinModError):
    pass


class NonIntegralScale(SpinModError):
    pass


class NotTwoRegular(SpinModError):
    pass


class BoundExceeded(SpinModError):
    pass


class NotAStaircase(SpinModError):
    pass


class ParameterOutOfRange(SpinModError):
    pass


class RowTooShort(SpinModError):
    pass


class InternalNonIntegral(ArithmeticError):
    """Raised when a quantity that must be an integer is not (a bug)."""


class MixedLevels(SpinModError):
    pass


class MixedKinds(SpinModError):
    pass


class ZeroCharacter(SpinModError):
    pass


class NotRouquier(SpinModError):
    pass


class NotUnitriangular(SpinModError):
    pass


class ShapeMismatch(SpinModError):
    pass


class NegativeAdjustment(SpinModError):
    pass


class ParseError(SpinModError):
    pass


class LabelMismatch(SpinModError):
    pass
