"""
Exception hierarchy for gwpower
"""

from typing import Iterable, Optional


class GwPowerError(Exception):
    """Base error; `context` names the module or operation that raised it"""

    def __init__(self, message: str, context: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.context = context

    def __str__(self) -> str:
        if self.context:
            return f"[{self.context}] {self.message}"
        return self.message


class FieldMismatch(GwPowerError):
    pass


class Unsupported(GwPowerError):
    pass


class NotInvertible(GwPowerError):
    pass


class NotIndependent(GwPowerError):
    pass


class NotEffective(GwPowerError):
    pass


class Degenerate(GwPowerError):
    pass


class InvalidArgument(GwPowerError):
    pass


class InternalError(GwPowerError):
    pass


class CatalogError(GwPowerError):
    pass


class ParseError(GwPowerError):
    """Syntax error with the offending position and the tokens that would have been accepted"""

    def __init__(self, message: str, position: int, expected: Iterable[str] = ()):
        self.position = position
        self.expected = tuple(sorted(set(expected)))
        detail = f"{message} at position {position}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail, context="parse")


__all__ = [
    "GwPowerError",
    "FieldMismatch",
    "Unsupported",
    "NotInvertible",
    "NotIndependent",
    "NotEffective",
    "Degenerate",
    "InvalidArgument",
    "InternalError",
    "CatalogError",
    "ParseError",
]
