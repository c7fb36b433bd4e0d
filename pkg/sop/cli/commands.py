"""
Subcommand handlers.

Each handler takes parsed arguments and returns a CommandResult; errors
propagate to the dispatcher, which maps them to exit codes.
"""

import argparse
import logging
import re
from pathlib import Path
from typing import Any

from sop.cancel.criterion import cancellativity_report
from sop.canonical.isomorphism import monoids_isomorphic
from sop.canonical.labeling import canonicalize
from sop.cli.output import (
    CommandResult,
    csv_text,
    degree_text,
    degree_value,
    pieces_text,
    table_text,
    write_csv,
)
from sop.core.config import get_settings
from sop.core.exceptions import ConfigurationError
from sop.generic.counting import count_isomorphism_types
from sop.generic.enumeration import presentation_count
from sop.generic.estimation import CSV_COLUMNS, estimate_proportion, limit_proportion
from sop.generic.sampling import LengthMode, SampleConfig
from sop.pieces.conditions import (
    c_violation,
    check_c,
    check_strong_c,
    repeated_relation_words,
    small_overlap_degree,
    xyz_factorization,
)
from sop.pieces.table import compute_pieces
from sop.presentation.models import Presentation, shortlex_key
from sop.presentation.operations import sorted_relation_words
from sop.presentation.parser import dump_presentation, load_presentation
from sop.wordproblem.solver import explain_equivalence

logger = logging.getLogger(__name__)

CONDITION_PATTERN = re.compile(r"(strong-)?c(\d+)")


def parse_condition(text: str) -> tuple[bool, int]:
    """`c4` -> (False, 4); `strong-c4` -> (True, 4)."""
    match = CONDITION_PATTERN.fullmatch(text.strip().lower())
    if match is None or int(match.group(2)) < 1:
        raise ConfigurationError(f"invalid condition {text!r}; expected c<n> or strong-c<n>")
    return match.group(1) is not None, int(match.group(2))


def _load(path: str) -> Presentation:
    return load_presentation(Path(path))


# --- check ---


def cmd_check(args: argparse.Namespace) -> CommandResult:
    p = _load(args.file)
    strong, n = parse_condition(args.condition)
    holds = check_strong_c(p, n) if strong else check_c(p, n)
    degree = small_overlap_degree(p)
    repeated = repeated_relation_words(p)

    payload: dict[str, Any] = {
        "condition": args.condition,
        "holds": holds,
        "degree": degree_value(degree),
        "repeated_relation_words": bool(repeated),
        "offender": None,
    }
    lines = [
        f"{args.condition}: {'holds' if holds else 'fails'}",
        f"degree: {degree_text(degree, get_settings().cli.degree_display_cap)}",
    ]
    violation = c_violation(p, n)
    if violation is not None:
        word, parts = violation
        payload["offender"] = {
            "relation_word": p.format_word(word),
            "pieces": [p.format_word(part) for part in parts],
        }
        lines.append(f"offender: {p.format_word(word)} = {pieces_text(p, parts)}")
    elif strong and repeated:
        payload["offender"] = {"relation_word": p.format_word(repeated[0]), "pieces": None}
        lines.append(f"offender: {p.format_word(repeated[0])} (repeated relation word)")
    return CommandResult.verdict(holds, payload, "\n".join(lines))


# --- pieces ---


def cmd_pieces(args: argparse.Namespace) -> CommandResult:
    p = _load(args.file)
    table = compute_pieces(p)
    pieces = sorted(table.pieces, key=shortlex_key)

    payload: dict[str, Any] = {
        "count": len(pieces),
        "max_piece_length": table.max_piece_length,
        "pieces": [p.format_word(piece) for piece in pieces],
        "factorizations": None,
    }
    lines = [f"{len(pieces)} pieces: {', '.join(payload['pieces'])}"]
    if check_c(p, 3):
        rows = []
        for word in sorted_relation_words(p):
            fact = xyz_factorization(word, table)
            rows.append({
                "relation_word": p.format_word(word),
                "x": p.format_word(fact.x),
                "y": p.format_word(fact.y),
                "z": p.format_word(fact.z),
            })
        payload["factorizations"] = rows
        lines.append(table_text(["relation_word", "x", "y", "z"], rows))
    else:
        lines.append("not C(3): no XYZ factorizations")
    return CommandResult(payload=payload, text="\n".join(lines))


# --- eq ---


def cmd_eq(args: argparse.Namespace) -> CommandResult:
    p = _load(args.file)
    u = p.alphabet.parse_word(args.word1)
    v = p.alphabet.parse_word(args.word2)
    trace = explain_equivalence(u, v, p)
    payload = {
        "word1": p.format_word(u),
        "word2": p.format_word(v),
        "equivalent": trace.verdict,
        "steps": trace.labels(),
    }
    text = f"{'equivalent' if trace.verdict else 'not equivalent'} ({' -> '.join(trace.labels())})"
    return CommandResult.verdict(trace.verdict, payload, text)


# --- canon ---


def cmd_canon(args: argparse.Namespace) -> CommandResult:
    p = _load(args.file)
    canonical = canonicalize(p)
    if args.out:
        dump_presentation(canonical.presentation, args.out)
    q = canonical.presentation
    payload = {
        "generators": list(q.alphabet.symbols),
        "relations": [q.format_relation(r) for r in q.relations],
        "eliminated": [
            {"generator": step.generator, "replacement": " ".join(step.replacement)}
            for step in canonical.provenance
        ],
        "serialization": canonical.serialization,
    }
    return CommandResult(payload=payload, text=canonical.serialization.rstrip("\n"))


# --- iso ---


def cmd_iso(args: argparse.Namespace) -> CommandResult:
    p = _load(args.file1)
    q = _load(args.file2)
    same = monoids_isomorphic(p, q)
    payload = {
        "isomorphic": same,
        "canonical": [canonicalize(p).serialization, canonicalize(q).serialization],
    }
    return CommandResult.verdict(same, payload, "isomorphic" if same else "not isomorphic")


# --- cancel ---


def cmd_cancel(args: argparse.Namespace) -> CommandResult:
    p = _load(args.file)
    report = cancellativity_report(p)

    def witness(found: Any) -> Any:
        return None if found is None else [p.format_word(found[0]), p.format_word(found[1])]

    payload = {
        "left": report.left,
        "right": report.right,
        "cancellative": report.cancellative,
        "left_witness": witness(report.left_witness),
        "right_witness": witness(report.right_witness),
    }
    lines = [
        f"left cancellative: {report.left}",
        f"right cancellative: {report.right}",
        f"cancellative: {report.cancellative}",
    ]
    for side, found in (("left", payload["left_witness"]), ("right", payload["right_witness"])):
        if found is not None:
            lines.append(f"{side} witness: {found[0]} = {found[1]}")
    return CommandResult.verdict(report.cancellative, payload, "\n".join(lines))


# --- experiment ---


def cmd_experiment(args: argparse.Namespace) -> CommandResult:
    settings = get_settings()
    seed = settings.experiment.seed if args.seed is None else args.seed
    trials = settings.experiment.trials if args.trials is None else args.trials

    rows = []
    for n in args.n:
        cfg = SampleConfig(
            alphabet_size=args.a,
            relation_count=args.k,
            length=n,
            length_mode=LengthMode(args.mode),
            seed=seed,
            trials=trials,
        )
        for name in args.property:
            estimate = estimate_proportion(cfg, name, workers=args.workers)
            row = estimate.csv_row(cfg)
            row["limit"] = f"{limit_proportion(args.a, args.k, name):.6f}"
            row["conditional_estimate"] = estimate.conditional_estimate
            rows.append(row)

    csv_rows = [{c: row[c] for c in CSV_COLUMNS} for row in rows]
    if args.csv == "-":
        text = csv_text(CSV_COLUMNS, csv_rows).rstrip("\n")
    else:
        if args.csv:
            with open(args.csv, "w", encoding="utf-8", newline="") as handle:
                write_csv(CSV_COLUMNS, csv_rows, handle)
            logger.info(f"Wrote {len(csv_rows)} rows to {args.csv}")
        text = table_text([*CSV_COLUMNS, "limit"], rows)
    return CommandResult(payload={"seed": seed, "rows": rows}, text=text)


# --- count ---


def cmd_count(args: argparse.Namespace) -> CommandResult:
    rows = []
    for n in args.n:
        counts = count_isomorphism_types(args.a, args.k, n)
        rows.append({
            "a": args.a,
            "k": args.k,
            "n": n,
            "presentations": presentation_count(args.a, args.k, n),
            "strong_c2": counts.strong_c2_count,
            "iso_types": counts.iso_type_count,
        })
    columns = ["a", "k", "n", "presentations", "strong_c2", "iso_types"]
    return CommandResult(payload={"rows": rows}, text=table_text(columns, rows))
