"""
Custom exception hierarchy for the small overlap toolkit.

Provides structured exceptions for better error handling and debugging.
"""

from typing import Optional, Sequence


class SmallOverlapError(Exception):
    """Base exception for all toolkit errors."""

    pass


class ConfigurationError(SmallOverlapError):
    """Raised when configuration validation fails or required config is missing."""

    pass


class PresentationError(SmallOverlapError):
    """Raised when a presentation, word or bijection violates the data model."""

    pass


class PresentationParseError(PresentationError):
    """Raised when a presentation file cannot be parsed."""

    def __init__(
        self,
        message: str,
        line_number: Optional[int] = None,
        line: Optional[str] = None,
    ):
        super().__init__(message)
        self.line_number = line_number
        self.line = line

    def __str__(self) -> str:
        parts = [super().__str__()]
        if self.line_number is not None:
            parts.append(f"Line: {self.line_number}")
        if self.line:
            parts.append(f"Text: {self.line.strip()}")
        return " | ".join(parts)


class PreconditionError(SmallOverlapError):
    """Raised when an input fails the small overlap condition an operation needs."""

    def __init__(
        self,
        message: str,
        condition: Optional[str] = None,
        relation_word: Optional[str] = None,
        decomposition: Optional[Sequence[str]] = None,
    ):
        super().__init__(message)
        self.condition = condition
        self.relation_word = relation_word
        self.decomposition = list(decomposition) if decomposition is not None else None

    def __str__(self) -> str:
        parts = [super().__str__()]
        if self.condition:
            parts.append(f"Condition: {self.condition}")
        if self.relation_word is not None:
            parts.append(f"Relation word: {self.relation_word}")
        if self.decomposition is not None:
            parts.append(f"Pieces: {' . '.join(self.decomposition)}")
        return " | ".join(parts)


class EnumerationGuardError(SmallOverlapError):
    """Raised when an exhaustive enumeration would exceed the configured limit."""

    def __init__(self, message: str, count: int, limit: int):
        super().__init__(message)
        self.count = count
        self.limit = limit

    def __str__(self) -> str:
        return f"{super().__str__()} | Count: {self.count} | Limit: {self.limit}"


class InvariantViolationError(SmallOverlapError):
    """Raised when two independent computations of the same fact disagree."""

    pass
