"""
Command-line front end.

`build_parser` declares the subcommands, `run` parses and dispatches them.
"""

from sop.cli.app import build_parser, dispatch, run
from sop.cli.output import CommandResult, ExitCode

__all__ = ["build_parser", "dispatch", "run", "CommandResult", "ExitCode"]
