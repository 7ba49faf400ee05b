"""Exception types shared across the package.

Every error carries a stable machine-readable ``code`` so the HTTP layer and
the CLI can report failures uniformly (code + message + offending field).
"""

from __future__ import annotations


class MarketEntryError(Exception):
    """Base class for all domain errors."""

    code = "ERROR"

    def __init__(self, message: str, *, field: str | None = None):
        super().__init__(message)
        self.message = message
        self.field = field

    def to_dict(self) -> dict:
        out = {"code": self.code, "message": self.message}
        if self.field is not None:
            out["field"] = self.field
        return out


class ValidationError(MarketEntryError):
    """Hard input violation; evaluation must not proceed."""

    code = "VALIDATION"


class NonFiniteInputError(MarketEntryError):
    code = "NON_FINITE_INPUT"


class InvalidRateError(MarketEntryError):
    code = "INVALID_RATE"


class GordonSingularityError(MarketEntryError):
    """Discount rate does not exceed the perpetual growth rate."""

    code = "GORDON_SINGULARITY"


class NegativeHorizonError(MarketEntryError):
    code = "NEGATIVE_HORIZON"


class UnknownItemRefError(MarketEntryError):
    """An adjustment references a line item that does not exist."""

    code = "UNKNOWN_ITEM_REF"


class PeriodNotFoundError(MarketEntryError):
    code = "PERIOD_NOT_FOUND"


class SideMismatchError(MarketEntryError):
    """Revaluation kind does not match the referenced item's side."""

    code = "SIDE_MISMATCH"


class ParseError(MarketEntryError):
    code = "PARSE_ERROR"

    def __init__(self, message: str, *, line: int | None = None, field: str | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message, field=field)
        self.line = line


class DuplicateItemError(MarketEntryError):
    code = "DUPLICATE_ITEM"


class UnorderedPeriodsError(MarketEntryError):
    code = "UNORDERED_PERIODS"


class CurrencyMissingError(MarketEntryError):
    code = "CURRENCY_MISSING"


class UnknownItemError(MarketEntryError):
    """A selection references an item id that does not exist."""

    code = "UNKNOWN_ITEM"


class UnknownGradeError(MarketEntryError):
    code = "UNKNOWN_GRADE"


class UnknownCountryError(MarketEntryError):
    code = "UNKNOWN_COUNTRY"


class UnknownCategoryError(MarketEntryError):
    code = "UNKNOWN_CATEGORY"


class NotFoundError(MarketEntryError):
    code = "NOT_FOUND"


class ConflictError(MarketEntryError):
    """Optimistic-concurrency failure: stale version token."""

    code = "CONFLICT"


class InsufficientMethodsError(MarketEntryError):
    code = "INSUFFICIENT_METHODS"
