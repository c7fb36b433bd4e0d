"""
Command-line entry point.

Configures logging from settings, runs one subcommand and prints its
payload on stdout.
"""

import logging
import sys
from typing import Optional, Sequence

from sop.cli.app import run
from sop.core.config import config
from sop.core.logging import setup_logging

logger = logging.getLogger(__name__)


def main(argv: Optional[Sequence[str]] = None) -> int:
    setup_logging(
        level=config.log_level,
        log_file=config.log_file,
    )
    as_json = "--json" in (sys.argv[1:] if argv is None else argv)

    result = run(argv)
    rendered = result.render(as_json)
    if rendered:
        print(rendered)
    logger.debug(f"Exit code {int(result.exit_code)}")
    return int(result.exit_code)


if __name__ == "__main__":
    sys.exit(main())
