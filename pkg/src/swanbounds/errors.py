"""Exception hierarchy.

Every error carries the CLI exit code it maps to, so the front end can turn
an exception from any module into the right process status.
"""

from __future__ import annotations


class SwanBoundsError(Exception):
    exit_code = 2


class ValidationError(SwanBoundsError, ValueError):
    """Bad input: the caller asked for something outside the domain."""

    exit_code = 2


class NotPositive(ValidationError):
    pass


class NotSquareFree(ValidationError):
    pass


class ExcludedD(ValidationError):
    """d = 1 or d = 3: fields with extra roots of unity are not handled."""


class PrimeTwo(ValidationError):
    pass


class NotPrime(ValidationError):
    pass


class NotAUnit(ValidationError, ArithmeticError):
    pass


class OutOfRange(ValidationError):
    pass


class NotCoprime(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class Unsupported(ValidationError):
    pass


class CapExceeded(SwanBoundsError):
    """A desk-scale cap was hit; raise the cap explicitly to go further."""

    exit_code = 3


class VerificationMismatch(SwanBoundsError):
    exit_code = 1
