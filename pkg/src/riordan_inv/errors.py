"""Exception hierarchy shared by the library and the command line."""


class RiordanError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(RiordanError, ValueError):
    """Malformed or mismatched input (parse failures, order mismatch, bad flags)."""


class PreconditionError(RiordanError, ArithmeticError):
    """A mathematical precondition does not hold, e.g. a zero constant term."""


class DefectError(RiordanError, AssertionError):
    """An internal postcondition failed. This indicates a bug, not bad input."""
