"""Exception types shared across the package."""

from __future__ import annotations


class GroupLangError(Exception):
    """Base class for every error raised by grouplang."""


class AlphabetError(GroupLangError, ValueError):
    """A word or rule uses a symbol outside the permitted alphabet."""


class DeterminismError(GroupLangError, ValueError):
    """A deterministic operation was requested on a nondeterministic table."""


class ValidationError(GroupLangError, ValueError):
    """An L-system (or one of its parts) is structurally invalid."""


class GrammarSyntaxError(GroupLangError, ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class DomainError(GroupLangError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class NonExhaustiveError(GroupLangError):
    """A search hit one of its caps where a complete answer was required."""


class WitnessConstructionError(GroupLangError):
    """A derivation witness could not be built within the internal caps."""
