from __future__ import annotations

#: Largest value allowed for any input or intermediate (signed 64-bit).
INT_LIMIT = 2**63 - 1

#: Largest membership table the engine will allocate.
MAX_TABLE_BOUND = 50_000_000


class SemigroupError(ValueError):
    """Base class for invalid inputs to the semigroup engine."""


class NotNumericalError(SemigroupError):
    """Generators have gcd > 1, so the generated monoid has no conductor."""


class OverflowGuardError(SemigroupError):
    """A value would leave the checked 64-bit range."""


class PreconditionError(SemigroupError):
    """An operation was called outside its domain of validity."""


def checked(value: int) -> int:
    if not -INT_LIMIT - 1 <= value <= INT_LIMIT:
        raise OverflowGuardError(f"{value} exceeds the 64-bit integer range")
    return value


def checked_mul(a: int, b: int) -> int:
    return checked(a * b)
