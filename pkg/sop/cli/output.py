"""
Command results and their text, JSON and CSV renderings.
"""

import csv
import io
import json
from enum import IntEnum
from typing import Any, Iterable, Optional, TextIO

from pydantic import BaseModel, Field

from sop.presentation.models import Presentation, Word


class ExitCode(IntEnum):
    SUCCESS = 0
    FALSE = 1
    USAGE = 2
    PRECONDITION = 3


class CommandResult(BaseModel):
    """Outcome of one subcommand: exit code, JSON payload and text rendering."""

    exit_code: ExitCode = ExitCode.SUCCESS
    payload: dict[str, Any] = Field(default_factory=dict)
    text: str = ""

    @classmethod
    def verdict(cls, holds: bool, payload: dict[str, Any], text: str) -> "CommandResult":
        return cls(
            exit_code=ExitCode.SUCCESS if holds else ExitCode.FALSE,
            payload=payload,
            text=text,
        )

    def render(self, as_json: bool) -> str:
        if as_json:
            return json.dumps(self.payload, indent=2, sort_keys=True)
        return self.text


def error_result(exit_code: ExitCode, error: Exception) -> CommandResult:
    payload: dict[str, Any] = {"error": type(error).__name__, "message": str(error)}
    for attr in ("condition", "relation_word", "decomposition", "line_number", "count", "limit"):
        value = getattr(error, attr, None)
        if value is not None:
            payload[attr] = value
    return CommandResult(exit_code=exit_code, payload=payload, text=f"error: {error}")


def word_text(p: Presentation, word: Word) -> str:
    return p.format_word(word)


def pieces_text(p: Presentation, pieces: Iterable[Word]) -> str:
    return " . ".join(p.format_word(piece) for piece in pieces)


def degree_value(degree: float) -> Optional[int]:
    """JSON form of a degree: an integer, or null when unbounded."""
    return None if degree == float("inf") else int(degree)


def degree_text(degree: float, cap: int) -> str:
    if degree == float("inf"):
        return "unbounded"
    if degree > cap:
        return f">= {cap}"
    return str(int(degree))


def csv_text(columns: list[str], rows: Iterable[dict[str, Any]]) -> str:
    buffer = io.StringIO()
    write_csv(columns, rows, buffer)
    return buffer.getvalue()


def write_csv(columns: list[str], rows: Iterable[dict[str, Any]], stream: TextIO) -> None:
    writer = csv.DictWriter(stream, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)


def table_text(columns: list[str], rows: list[dict[str, Any]]) -> str:
    """Fixed-width table for terminal output."""
    cells = [[str(row.get(c, "")) for c in columns] for row in rows]
    widths = [max(len(c), *(len(r[i]) for r in cells)) if cells else len(c) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths))]
    lines.append("  ".join("-" * w for w in widths))
    for r in cells:
        lines.append("  ".join(v.ljust(w) for v, w in zip(r, widths)))
    return "\n".join(lines)
