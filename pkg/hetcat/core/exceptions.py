"""
Exception classes for the hetcat core library.

Absence of a mathematical structure is not always an exception: the
representation searches return None when no universal exists. The builders
that need a representation for every object raise HetcatNegativeResult instead,
carrying the report that names each failing object.

Exceptions to handle:
- HetcatParameterError: unknown names, non-composable pairs, boundary mismatches
- HetcatValidationError: input tables break a category, functor or het law
- HetcatNegativeResult: the requested universal, adjunction or brain functor does not exist
- HetcatIntegrityError: a value claims a property it does not have
- SpecParseError: a spec file does not parse (a HetcatParameterError)
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .validation import ValidationReport


class HetcatError(Exception):
    """Base exception class for all hetcat errors."""
    pass


class HetcatParameterError(HetcatError):
    """Raised when invalid parameters are provided to an operation."""
    pass


class HetcatValidationError(HetcatError):
    """Raised when input tables violate the laws of their structure."""

    def __init__(self, message, report: ValidationReport):
        super().__init__(message)
        self.report = report


class HetcatNegativeResult(HetcatError):
    """Raised when a requested universal construction does not exist."""

    def __init__(self, message, report: ValidationReport):
        super().__init__(message)
        self.report = report


class HetcatIntegrityError(HetcatError):
    """Raised when a stored value fails its own invariant."""
    pass


class SpecParseError(HetcatParameterError):
    """Raised when a spec file cannot be parsed."""

    def __init__(
        self,
        message,
        line: int,
        column: int,
        expected: tuple[str, ...] = (),
        source: str | None = None,
    ):
        where = f"{source}:{line}:{column}" if source else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")
        self.reason = message
        self.source = source
        self.line = line
        self.column = column
        self.expected = expected
