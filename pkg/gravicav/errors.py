"""
gravicav errors — exception hierarchy shared by every layer.

Each exception carries a machine-readable ``code`` (UPPER_SNAKE) so that
callers such as the scenario runner can record failures without parsing
messages. All of them are ``ValueError`` subclasses: a bad dimension or an
out-of-range coupling is a bad value handed to a pure function.
"""

from __future__ import annotations

from typing import Any, List, Optional


class GravicavError(ValueError):
    """Base class for all gravicav errors."""

    code = "GRAVICAV_ERROR"

    def __init__(self, message: str, *, path: str = ""):
        super().__init__(message)
        self.message = message
        self.path = path

    def to_dict(self) -> dict:
        d = {"code": self.code, "message": self.message}
        if self.path:
            d["path"] = self.path
        return d


class InvalidDimension(GravicavError):
    code = "INVALID_DIMENSION"


class DimensionMismatch(GravicavError):
    code = "DIMENSION_MISMATCH"


class TailOverflow(GravicavError):
    """Truncated basis would discard more probability mass than allowed."""

    code = "TAIL_OVERFLOW"

    def __init__(self, message: str, *, tail_mass: float = 0.0, path: str = ""):
        super().__init__(message, path=path)
        self.tail_mass = tail_mass


class ExpmFailure(GravicavError):
    code = "EXPM_FAILURE"


class InvalidParameter(GravicavError):
    code = "INVALID_PARAMETER"


class NegativeTime(InvalidParameter):
    code = "NEGATIVE_TIME"


class StrainTooLarge(InvalidParameter):
    code = "STRAIN_TOO_LARGE"


class BudgetExceeded(GravicavError):
    code = "BUDGET_EXCEEDED"


class NoMinimumFound(GravicavError):
    code = "NO_MINIMUM_FOUND"


class UnsupportedState(GravicavError):
    code = "UNSUPPORTED_STATE"


class ConfigError(GravicavError):
    """One or more configuration problems, collected before raising."""

    code = "CONFIG_ERROR"

    def __init__(self, message: str, issues: Optional[List[Any]] = None):
        super().__init__(message)
        self.issues = list(issues or [])

    def to_dict(self) -> dict:
        d = super().to_dict()
        d["issues"] = [i.to_dict() if hasattr(i, "to_dict") else str(i) for i in self.issues]
        return d


class ApproximationDomainWarning(UserWarning):
    """A closed-form approximation is evaluated outside its stated domain."""
