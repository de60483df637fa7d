"""Exception hierarchy shared by every nilfactor module."""


class NilfactorError(Exception):
    """Base class for all library errors."""


class FieldMismatch(NilfactorError, ValueError):
    """Operands belong to different fields."""


class DimensionMismatch(NilfactorError, ValueError):
    """Operand shapes are incompatible."""


class DivisionByZero(NilfactorError, ZeroDivisionError):
    """Inverse of the zero scalar was requested."""


class SingularMatrix(NilfactorError, ValueError):
    """An invertible matrix was required."""


class NotNilpotent(NilfactorError, ValueError):
    pass


class NotSingular(NilfactorError, ValueError):
    """Input is invertible, so it is not a product of nilpotent matrices."""


class ExceptionalCase(NilfactorError, ValueError):
    """Input is a nonzero nilpotent 2x2 matrix, which has no such factorization."""


class SquareZero(NilfactorError, ValueError):
    pass


class ScalarMatrix(NilfactorError, ValueError):
    pass


class ScalarOnRange(NilfactorError, ValueError):
    """A acts as a nonzero scalar on its range (A is a multiple of an idempotent).

    No vector x has Ax and A^2 x independent in that case.
    """


class InvalidK(NilfactorError, ValueError):
    pass


class UnsupportedSize(NilfactorError, ValueError):
    pass


class SearchExhausted(NilfactorError, RuntimeError):
    pass


class DependentSystem(NilfactorError, RuntimeError):
    pass


class CertificateError(NilfactorError, AssertionError):
    """A constructed object failed its own exact verification."""


class ParseError(NilfactorError, ValueError):
    pass
