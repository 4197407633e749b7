"""Exception hierarchy shared by every module of the package."""


class CodingError(Exception):
    """Base class for all errors raised by addrepair."""


class InvalidParams(CodingError, ValueError):
    """Parameters violate a construction or operation hypothesis."""


# field
class NonPrimeModulus(InvalidParams):
    pass


class ReducibleModulusPolynomial(InvalidParams):
    pass


class UnsupportedSize(InvalidParams):
    pass


class ZeroInverse(CodingError, ZeroDivisionError):
    pass


class ZeroElement(CodingError, ValueError):
    pass


# matrix
class SingularMatrix(CodingError, ArithmeticError):
    pass


class DimensionMismatch(CodingError, ValueError):
    pass


class DuplicatePoints(CodingError, ValueError):
    pass


# code core
class LengthMismatch(CodingError, ValueError):
    pass


class EnumerationTooLarge(CodingError):
    pass


class NotACodeword(CodingError, ValueError):
    pass


class NodeOutOfRange(CodingError, IndexError):
    pass


class InvalidPlan(CodingError, ValueError):
    pass


# constructions
class BadExponents(InvalidParams):
    pass


class SingularSystem(CodingError, RuntimeError):
    pass


class TooManyGroups(InvalidParams):
    pass


class DivisibilityViolation(InvalidParams):
    pass


class RankDeficiency(CodingError, RuntimeError):
    pass


class InvalidShape(CodingError, ValueError):
    pass


# baselines
class MdsSeedFailure(CodingError, RuntimeError):
    pass


class PointNotInCode(CodingError, ValueError):
    pass


# bench
class RepairMismatch(CodingError, RuntimeError):
    pass


class CostDrift(CodingError, RuntimeError):
    """Repair cost differed between trials (a data-dependent branch)."""
