"""Exception hierarchy shared by every module."""

from __future__ import annotations


class HeffterError(Exception):
    """Base class for domain failures."""


class InvalidArgument(HeffterError, ValueError):
    pass


class InvalidModulus(InvalidArgument):
    pass


class InvalidIndex(InvalidArgument):
    pass


class InvalidOrder(InvalidArgument):
    pass


class FieldMismatch(HeffterError, ValueError):
    pass


class DimensionMismatch(HeffterError, ValueError):
    pass


class NotRankOne(HeffterError):
    pass


class UnsupportedField(HeffterError):
    pass


class NotAdmissible(HeffterError):
    pass


class NotPerfectEligible(HeffterError):
    pass


class NotAgreeable(HeffterError):
    pass


class InvalidParams(HeffterError, ValueError):
    pass


class ParseError(HeffterError):
    """Malformed document text; carries 1-based line and column when known."""

    def __init__(self, msg: str, line: int | None = None, col: int | None = None):
        where = f" (line {line}, column {col})" if line is not None else ""
        super().__init__(msg + where)
        self.line = line
        self.col = col


class SchemaError(HeffterError):
    pass
