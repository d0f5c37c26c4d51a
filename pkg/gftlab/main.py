"""
gftlab — command-line entry point.

Builds the argument parser from the subcommand modules, validates the common
flags into a ``CliConfig`` and maps service exceptions to exit codes:
0 on success, 1 when a verification row falls outside tolerance, 2 for bad
input (unparseable documents, arguments outside their domain, unknown names).
"""

import argparse
import logging
import sys
from typing import List, Optional, TextIO

from pydantic import ValidationError

from gftlab import __version__
from gftlab.commands import COMMANDS
from gftlab.config import settings
from gftlab.exceptions import (
    AccuracyError,
    DocumentError,
    DomainError,
    NotFoundError,
    PoleError,
    RootNotFoundError,
)
from gftlab.schemas.cli import CliConfig

# ── Logging ───────────────────────────────────────────────────────────────────
logging.basicConfig(
    level=getattr(logging, settings.log_level.upper(), logging.WARNING),
    format="%(asctime)s | %(name)-30s | %(levelname)-8s | %(message)s",
    stream=sys.stderr,
)
logger = logging.getLogger(__name__)

INPUT_ERRORS = (DocumentError, ValidationError, DomainError, NotFoundError)


# ── Parser ────────────────────────────────────────────────────────────────────
def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--tol", type=float, help="Comparison tolerance (env GFT_DEFAULT_TOL)")
    common.add_argument("--guard", type=float, help="Guard circle radius in (0, 1)")
    common.add_argument("--angles", type=int, help="Angular nodes per circle (≥ 64)")
    common.add_argument("--seed", type=int, help="Seed for the property suites")
    common.add_argument("-v", "--verbose", action="count", default=0)
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=settings.app_name,
        description="Numerical verification of radius, inclusion and sufficiency results "
        "for Silverman-type classes of analytic functions.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    parents = [_common_flags()]
    for module in COMMANDS.values():
        module.register(subparsers, parents)
    return parser


def _config(args: argparse.Namespace) -> CliConfig:
    supplied = {
        key: getattr(args, key)
        for key in ("tol", "guard", "angles", "seed")
        if getattr(args, key) is not None
    }
    return CliConfig(command=args.command, format=args.format, **supplied)


# ── Dispatch ──────────────────────────────────────────────────────────────────
def run(config: CliConfig, args: argparse.Namespace, stream: TextIO) -> int:
    """Dispatch to the subcommand and return its exit status."""
    logger.info("Running %s (format=%s)", config.command.value, config.format.value)
    return COMMANDS[config.command.value].handle(config, args, stream)


def main(argv: Optional[List[str]] = None, stream: Optional[TextIO] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.verbose:
        logging.getLogger("gftlab").setLevel(logging.DEBUG if args.verbose > 1 else logging.INFO)

    try:
        config = _config(args)
        return run(config, args, stream or sys.stdout)
    except INPUT_ERRORS as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except (RootNotFoundError, AccuracyError, PoleError) as exc:
        logger.error("❌ Verification failed: %s", exc)
        return 1


def cli() -> None:
    sys.exit(main())


if __name__ == "__main__":
    cli()
