"""Exception hierarchy shared by all symlevel modules."""


class SymlevelError(Exception):
    """Base class for all errors raised by this package."""


class SizeLimitError(SymlevelError, ValueError):
    """A requested computation exceeds its configured size cap."""


class InvalidCharacteristicError(SymlevelError, ValueError):
    """Characteristic must be 0 or an integer >= 2 (p = 1 is rejected everywhere)."""


class DomainError(SymlevelError, ValueError):
    """Inputs are outside the stated domain of an operation (e.g. size mismatch)."""


class ArithmeticBugError(SymlevelError, RuntimeError):
    """An exactness invariant failed (non-integral division, mismatch of dual
    formulas).  This indicates a bug and must never trigger on valid inputs."""


def check_characteristic(p: int) -> int:
    """Validate a characteristic: 0 means characteristic zero, otherwise p >= 2."""
    if p == 0 or p >= 2:
        return p
    raise InvalidCharacteristicError(f"characteristic must be 0 or >= 2, got {p}")
