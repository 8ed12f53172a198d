"""Error types shared across the package."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Violation:
    """One validity failure, anchored to an event position in the word."""

    code: str  # NegativeCount | BadIndex | NonzeroEnd | MultipleComponents | EmptyWord
    position: int
    message: str

    def __str__(self) -> str:
        return f"{self.code} at event {self.position}: {self.message}"


class ValidationError(ValueError):
    """A word (or an argument built from one) failed validation."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class ParseError(ValueError):
    """Malformed DSL text.  Carries 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class InvalidMove(ValueError):
    """A move's validity predicate does not hold at the requested site."""


class BudgetExceeded(RuntimeError):
    """A computation hit its hard resource cap.

    For searches, ``best`` carries the best result found before the cap.
    """

    def __init__(self, message: str, best=None):
        self.best = best
        super().__init__(message)


class BracketMismatch(ValueError):
    """Two words offered as positions of one knot have different invariants."""


class UnknownName(KeyError):
    """No catalog entry with the requested name."""
