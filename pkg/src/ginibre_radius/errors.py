"""Exception hierarchy shared by all modules."""


class GinibreError(Exception):
    """Base class for every error raised by this package."""


class LengthError(GinibreError, ValueError):
    pass


class ShapeError(GinibreError, ValueError):
    pass


class RangeError(GinibreError, ValueError):
    pass


class DomainError(GinibreError, ValueError):
    pass


class ConvergenceError(GinibreError, ArithmeticError):
    pass


class SizeError(GinibreError, ValueError):
    pass


class ZeroError(GinibreError, ArithmeticError):
    """Power iteration lost its iterate to underflow."""


class CapacityError(GinibreError, RuntimeError):
    """Requested work exceeds the configured draw budget."""


class DataError(GinibreError, ValueError):
    pass


class GuardError(GinibreError, ValueError):
    """A declared regime is incompatible with the ensemble's delta_n."""


class ParseError(GinibreError, ValueError):
    pass


class ValidationError(GinibreError, ValueError):
    pass
