"""Exception types shared across the package.

Every error carries a ``witness``: a small JSON-serializable object naming the
violating element, pair, or triple, so callers (and the CLI) can report exactly
what failed.
"""

from __future__ import annotations

from typing import Any


class TorsionLabError(Exception):
    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness if witness is not None else {}

    def describe(self) -> dict:
        return {"error": type(self).__name__, "message": str(self), "witness": self.witness}


class ValidationError(TorsionLabError):
    """Input violates a documented precondition or invariant (CLI exit code 2)."""


class CapExceeded(TorsionLabError):
    """An enumeration would exceed the configured cap (CLI exit code 3)."""


# group construction
class NotAssociative(ValidationError):
    pass


class NoIdentity(ValidationError):
    pass


class NoInverse(ValidationError):
    pass


class NotLatinSquare(ValidationError):
    pass


class NotPermutation(ValidationError):
    pass


class ClosureTooLarge(CapExceeded):
    pass


# cocycle algebra
class NotNormalized(ValidationError):
    pass


class CocycleViolation(ValidationError):
    pass


class ModulusTooSmall(ValidationError):
    pass


class NoTrivialization(ValidationError):
    pass


# sectors
class IndexOutOfRange(ValidationError):
    pass


class UnsupportedPresentation(ValidationError):
    pass


# inner local systems
class ConditionFailed(ValidationError):
    pass


# surface holonomy
class NotClosed(ValidationError):
    pass


class FrameMismatch(ValidationError):
    pass


class LabelMismatch(ValidationError):
    pass


# command line
class ParseError(ValidationError):
    pass


class SchemaError(ValidationError):
    pass
