"""
Custom toolkit exceptions.

Distinct exception types let the CLI map failures to exit codes without
string-matching on messages.
"""

from typing import Optional


class DomainError(ValueError):
    """Raised when an argument lies outside the domain an operation is stated for."""


class NotFoundError(ValueError):
    """Raised when a catalog name or radius problem id does not exist."""


class DocumentError(ValueError):
    """Raised when an input document does not parse into a series."""


class RootNotFoundError(ValueError):
    """Raised when a defining function shows no sign change on (0, 1)."""


class PoleError(ValueError):
    """Raised when f or f' vanishes where a functional divides by it."""

    def __init__(self, message: str, location: complex) -> None:
        super().__init__(message)
        self.location = location


class AccuracyError(ArithmeticError):
    """Raised when a quadrature rule fails to reach its tolerance."""

    def __init__(self, message: str, estimate: Optional[float] = None) -> None:
        super().__init__(message)
        self.estimate = estimate
