# liebasis_lib/errors.py
"""
Exception hierarchy shared by the library and the CLI.

The CLI maps these onto exit codes: validation errors exit with 1,
BudgetExceededError with 2 and NotBirationalError with 3.
"""


class LieBasisError(Exception):
    """Base class for all errors raised by liebasis."""
    pass


class RootSystemError(LieBasisError, ValueError):
    """Invalid Cartan type, weight or Weyl group word."""
    pass


class OrderError(LieBasisError, ValueError):
    """Unknown monomial order or incompatible exponent vectors."""
    pass


class SequenceError(LieBasisError, ValueError):
    """A sequence entry does not name a positive root."""
    pass


class BudgetExceededError(LieBasisError):
    """A configured size cap was hit before the computation finished."""

    def __init__(self, message: str, size: int | None = None, cap: int | None = None):
        super().__init__(message)
        self.size = size
        self.cap = cap


class NotBirationalError(LieBasisError):
    """Some weight space could not be filled by monomials in the sequence."""

    def __init__(self, message: str, weight: tuple[int, ...] | None = None,
                 found: int = 0, expected: int = 0):
        super().__init__(message)
        self.weight = weight
        self.found = found
        self.expected = expected


class InternalConsistencyError(LieBasisError):
    """An exact identity that must hold was violated."""
    pass
