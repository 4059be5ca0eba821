"""Command-line entry point"""

import argparse
import sys
from collections.abc import Sequence

from qwalk import __version__
from qwalk.cli.commands import analyze, blowup, design, evolve, families, grid_peaks, srg
from qwalk.core.config import settings
from qwalk.core.exceptions import QWalkError
from qwalk.core.logging import bind_run_context, get_logger, setup_logging
from qwalk.schemas import ErrorResponse

logger = get_logger(__name__)

COMMANDS = (analyze, evolve, families, srg, design, grid_peaks, blowup)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qwalk",
        description="Peak, perfect and zero state transfer in two-reflection quantum walks",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        type=str.upper,
        default=None,
        help="Override QWALK_LOG for this run",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run one command.

    Returns:
        0 on success, 2 on input parse errors, 3 on precondition violations.
        Usage errors exit with 2 from argparse directly.
    """
    args = build_parser().parse_args(argv)
    if args.log_level is not None:
        setup_logging(args.log_level)
    bind_run_context(command=args.command)
    try:
        return int(args.handler(args))
    except QWalkError as exc:
        response = ErrorResponse.from_exception(exc)
        logger.debug("Command failed", command=args.command, error=response.error)
        sys.stderr.write(response.one_line() + "\n")
        return exc.exit_code
    except Exception as exc:
        logger.error("Unhandled exception", exc_info=exc, command=args.command)
        if settings.is_development:
            raise
        sys.stderr.write(f"{exc.__class__.__name__}: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
