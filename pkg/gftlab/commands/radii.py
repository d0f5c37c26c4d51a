"""``radii`` — solve the thirteen radius problems and compare with their constants."""

import argparse
from typing import TextIO

from gftlab.commands.common import disk_grid
from gftlab.schemas.cli import CliConfig
from gftlab.services.radius_lab import SHARPNESS_TOL, solve_catalog
from gftlab.utils.output import write_table

COLUMNS = [
    "id", "computed", "expected", "abs_diff", "tolerance", "within", "sharp",
    "sharpness_residual", "residual", "iterations",
]


def register(subparsers, parents) -> None:
    subparsers.add_parser(
        "radii",
        parents=parents,
        help="Reproduce every radius constant",
        description="Smallest positive root of each defining function, with sharpness checks.",
    )


def handle(config: CliConfig, args: argparse.Namespace, stream: TextIO) -> int:
    rows = solve_catalog(config.tol, disk_grid(config))
    write_table((row.model_dump() for row in rows), COLUMNS, config.format.value, stream, "radii")
    ok = all(
        row.within and (row.sharpness_residual is None or row.sharpness_residual <= SHARPNESS_TOL)
        for row in rows
    )
    return 0 if ok else 1
