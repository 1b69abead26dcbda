"""Exception hierarchy shared by every module and mapped onto CLI exit codes."""


class UlrichError(Exception):
    """Base class for all errors raised by :mod:`ulrich_ruled`."""


class ValidationError(UlrichError, ValueError):
    """Inputs violate a stated precondition (CLI exit code 2)."""


class IntegralityError(ValidationError):
    """A quantity that must be an integer came out half-integral."""


class InvariantViolation(UlrichError, AssertionError):
    """An identity that must hold for every valid input failed (CLI exit code 3)."""
