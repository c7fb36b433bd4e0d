"""
Reading and writing `.sop` presentation files.

Format (UTF-8):

    generators: a b c
    relation: a b c = a d e   # comment
    relation: 1 = a b         # `1` is the empty word

Blank lines and `#` comments are ignored; the generators line comes first.
"""

import io
import logging
from pathlib import Path
from typing import TextIO, Union

from sop.core.exceptions import PresentationError, PresentationParseError
from sop.presentation.models import (
    EMPTY_WORD,
    EMPTY_WORD_TOKEN,
    TOKEN_PATTERN,
    Alphabet,
    Presentation,
    Relation,
    Word,
)

logger = logging.getLogger(__name__)

GENERATORS_KEY = "generators:"
RELATION_KEY = "relation:"


def _parse_side(alphabet: Alphabet, text: str, line_number: int, line: str) -> Word:
    tokens = text.split()
    if not tokens:
        raise PresentationParseError(
            "relation side is empty; write the empty word as '1'", line_number, line
        )
    if tokens == [EMPTY_WORD_TOKEN]:
        return EMPTY_WORD
    try:
        return alphabet.parse_word(text)
    except PresentationError as e:
        raise PresentationParseError(str(e), line_number, line) from e


def parse_presentation(text: Union[str, TextIO]) -> Presentation:
    """
    Parse a presentation from text or a text stream.

    Alphabet order and relation order are kept as written.

    Raises:
        PresentationParseError: malformed line, unknown or duplicate token
    """
    stream = io.StringIO(text) if isinstance(text, str) else text

    alphabet: Alphabet | None = None
    relations: list[Relation] = []

    for line_number, raw in enumerate(stream, start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue

        if content.startswith(GENERATORS_KEY):
            if alphabet is not None:
                raise PresentationParseError("second generators line", line_number, raw)
            tokens = content[len(GENERATORS_KEY):].split()
            seen: set[str] = set()
            for token in tokens:
                if not TOKEN_PATTERN.fullmatch(token):
                    raise PresentationParseError(
                        f"invalid generator token: {token!r}", line_number, raw
                    )
                if token in seen:
                    raise PresentationParseError(
                        f"duplicate generator declaration: {token!r}", line_number, raw
                    )
                seen.add(token)
            alphabet = Alphabet(symbols=tuple(tokens))
            continue

        if alphabet is None:
            raise PresentationParseError(
                "expected 'generators:' before any relation", line_number, raw
            )

        if not content.startswith(RELATION_KEY):
            raise PresentationParseError("malformed line", line_number, raw)

        body = content[len(RELATION_KEY):]
        sides = body.split("=")
        if len(sides) != 2:
            raise PresentationParseError(
                "relation must have exactly one '='", line_number, raw
            )
        lhs = _parse_side(alphabet, sides[0], line_number, raw)
        rhs = _parse_side(alphabet, sides[1], line_number, raw)
        relations.append(Relation(lhs=lhs, rhs=rhs))

    if alphabet is None:
        raise PresentationParseError("missing 'generators:' line")

    presentation = Presentation(alphabet=alphabet, relations=tuple(relations))
    logger.debug(
        f"Parsed presentation with {len(alphabet)} generators "
        f"and {len(relations)} relations"
    )
    return presentation


def serialize_presentation(p: Presentation) -> str:
    """Render a presentation in the `.sop` file format (round-trips exactly)."""
    header = GENERATORS_KEY
    if p.alphabet.symbols:
        header += " " + " ".join(p.alphabet.symbols)
    lines = [header]
    for relation in p.relations:
        lines.append(f"{RELATION_KEY} {p.format_relation(relation)}")
    return "\n".join(lines) + "\n"


def load_presentation(path: Union[str, Path]) -> Presentation:
    """Read and parse a `.sop` file."""
    file_path = Path(path)
    with file_path.open(encoding="utf-8") as handle:
        presentation = parse_presentation(handle)
    logger.info(f"Loaded presentation from {file_path}")
    return presentation


def dump_presentation(p: Presentation, path: Union[str, Path]) -> None:
    """Write a presentation to a `.sop` file."""
    file_path = Path(path)
    if file_path.parent:
        file_path.parent.mkdir(parents=True, exist_ok=True)
    file_path.write_text(serialize_presentation(p), encoding="utf-8")
    logger.info(f"Wrote presentation to {file_path}")
