"""
Exception hierarchy shared by the core packages.

The CLI maps the three families to exit codes: InputError/LimitError -> 2,
ConstructionError -> 3.
"""

from typing import Any, Dict, List, Optional


class SecureCutError(Exception):
    """Base class for every error raised by the library."""


# ---------------------------------------------------------------------------
# input
# ---------------------------------------------------------------------------
class InputError(SecureCutError, ValueError):
    pass


class ParseError(InputError):
    def __init__(self, message: str, line: Optional[int] = None, field: Optional[str] = None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field:
            where.append(f"field `{field}`")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class NetworkValidationError(InputError):
    pass


class NotACutEdge(InputError):
    pass


# ---------------------------------------------------------------------------
# finite field / linear algebra
# ---------------------------------------------------------------------------
class FieldError(SecureCutError, ValueError):
    pass


class NotPrime(FieldError):
    pass


class NotSquare(FieldError):
    pass


class SingularMatrix(FieldError):
    pass


class DimensionMismatch(FieldError):
    pass


# ---------------------------------------------------------------------------
# size limits
# ---------------------------------------------------------------------------
class LimitError(SecureCutError):
    pass


class TooManyNodes(LimitError):
    pass


class TooLarge(LimitError):
    pass


class ZTooLarge(LimitError):
    pass


# ---------------------------------------------------------------------------
# randomized constructions and certificates
# ---------------------------------------------------------------------------
class ConstructionError(SecureCutError):
    pass


class RetriesExhausted(ConstructionError):
    def __init__(self, message: str, diagnostics: Optional[List[Dict[str, Any]]] = None):
        self.diagnostics = diagnostics or []
        super().__init__(message)


class NoSimultaneousMaximizer(ConstructionError):
    pass


class MaximalityViolated(ConstructionError):
    pass


class NothingToAchieve(ConstructionError):
    pass
