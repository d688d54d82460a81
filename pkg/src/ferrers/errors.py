"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class FerrersError(Exception):
    """Base class for all library errors."""


class ParseError(FerrersError, ValueError):
    """Malformed textual input. ``index`` is the offending position, if known."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class DomainError(FerrersError, ValueError):
    """Input is well formed but outside the domain of an operation."""


class ResourceLimitError(FerrersError, RuntimeError):
    """An exhaustive computation would exceed its configured guard."""
