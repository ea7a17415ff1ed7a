"""Exception types shared across the package."""

from __future__ import annotations


class QdegenError(Exception):
    """Base class for every error raised by this package."""


class DomainError(QdegenError, ValueError):
    """A parameter lies outside the mathematical domain of the operation."""


class ContractError(QdegenError, ValueError):
    """Arguments are mutually inconsistent (e.g. state/lattice size mismatch)."""


class CapacityError(QdegenError, ValueError):
    """A parameter exceeds a documented desk-scale cap.

    ``hint`` names the alternative that has no such cap, when one exists.
    """

    def __init__(self, message: str, cap: int | None = None, hint: str | None = None):
        if hint:
            message = f"{message} ({hint})"
        super().__init__(message)
        self.cap = cap
        self.hint = hint


class UnsupportedMethodError(QdegenError, ValueError):
    """The requested counting method does not apply to these parameters."""


class RootFindingError(QdegenError, ArithmeticError):
    """Root iteration failed to converge or collapsed two approximations."""

    def __init__(self, message: str, bracket: tuple[float, float] | None = None):
        if bracket is not None:
            message = f"{message} [last bracket: {bracket[0]!r}, {bracket[1]!r}]"
        super().__init__(message)
        self.bracket = bracket
