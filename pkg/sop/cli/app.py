"""
Argument parser and dispatcher for the `sop` command.

Subcommands are registered in one table, like routers included into a
single application; the dispatcher turns domain errors into exit codes.
"""

import argparse
import logging
from typing import Callable, Optional, Sequence

from pydantic import ValidationError

from sop.cli import commands
from sop.cli.output import CommandResult, ExitCode, error_result
from sop.core.exceptions import (
    ConfigurationError,
    EnumerationGuardError,
    PreconditionError,
    PresentationError,
)
from sop.core.logging import LEVELS, set_level

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace], CommandResult]

USAGE_ERRORS = (
    PresentationError,
    ConfigurationError,
    EnumerationGuardError,
    ValidationError,
    OSError,
)


def _common_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parent.add_argument(
        "--log-level",
        default=None,
        type=str.upper,
        choices=LEVELS,
        help="override SOP_LOG_LEVEL",
    )
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sop",
        description="Small overlap monoid presentations: conditions, word problem, "
        "isomorphism, cancellativity and generic-case experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common_options()

    check = sub.add_parser("check", parents=[common], help="test C(n) or strong C(n)")
    check.add_argument("file")
    check.add_argument("--condition", default="c4", help="c<n> or strong-c<n> (default c4)")
    check.set_defaults(handler=commands.cmd_check)

    pieces = sub.add_parser("pieces", parents=[common], help="list pieces and XYZ factorizations")
    pieces.add_argument("file")
    pieces.set_defaults(handler=commands.cmd_pieces)

    eq = sub.add_parser("eq", parents=[common], help="decide equality of two words (needs C(4))")
    eq.add_argument("file")
    eq.add_argument("word1", help="whitespace-separated tokens; 1 is the empty word")
    eq.add_argument("word2")
    eq.set_defaults(handler=commands.cmd_eq)

    canon = sub.add_parser("canon", parents=[common], help="canonical presentation (needs C(2))")
    canon.add_argument("file")
    canon.add_argument("--out", default=None, help="also write the canonical presentation here")
    canon.set_defaults(handler=commands.cmd_canon)

    iso = sub.add_parser("iso", parents=[common], help="decide isomorphism (needs C(2))")
    iso.add_argument("file1")
    iso.add_argument("file2")
    iso.set_defaults(handler=commands.cmd_iso)

    cancel = sub.add_parser("cancel", parents=[common], help="cancellativity report (needs C(4))")
    cancel.add_argument("file")
    cancel.set_defaults(handler=commands.cmd_cancel)

    experiment = sub.add_parser("experiment", parents=[common], help="Monte Carlo proportions")
    experiment.add_argument("--a", type=int, required=True, help="alphabet size")
    experiment.add_argument("--k", type=int, required=True, help="number of relations")
    experiment.add_argument("--n", type=int, nargs="+", required=True, help="length parameters")
    experiment.add_argument("--mode", choices=["sum", "max"], default="sum")
    experiment.add_argument("--trials", type=int, default=None)
    experiment.add_argument("--seed", type=int, default=None, help="defaults to SOP_SEED")
    experiment.add_argument("--property", nargs="+", default=["left-cancellative"])
    experiment.add_argument("--csv", default=None, help="CSV output path, '-' for stdout")
    experiment.add_argument("--workers", type=int, default=None)
    experiment.set_defaults(handler=commands.cmd_experiment)

    count = sub.add_parser("count", parents=[common], help="exact isomorphism-type counts")
    count.add_argument("--a", type=int, required=True)
    count.add_argument("--k", type=int, required=True)
    count.add_argument("--n", type=int, nargs="+", required=True)
    count.set_defaults(handler=commands.cmd_count)

    return parser


def dispatch(args: argparse.Namespace) -> CommandResult:
    """Run the selected handler, mapping domain errors to exit codes."""
    handler: Handler = args.handler
    if args.log_level:
        set_level(args.log_level)
    try:
        return handler(args)
    except PreconditionError as e:
        logger.debug(f"{args.command}: precondition failed: {e}")
        return error_result(ExitCode.PRECONDITION, e)
    except USAGE_ERRORS as e:
        logger.debug(f"{args.command}: {type(e).__name__}: {e}")
        return error_result(ExitCode.USAGE, e)


def run(argv: Optional[Sequence[str]] = None) -> CommandResult:
    """Parse `argv` and run the command; argparse usage errors become exit 2."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # --help exits 0; every other parser exit is a usage error
        code = ExitCode.SUCCESS if e.code in (0, None) else ExitCode.USAGE
        return CommandResult(exit_code=code)
    return dispatch(args)
