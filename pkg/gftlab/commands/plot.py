"""``plot`` — data for external plotting: boundary traces and growth profiles."""

import argparse
from typing import TextIO

from gftlab.schemas.catalog import PhiName
from gftlab.schemas.cli import CliConfig
from gftlab.services.maminda_catalog import boundary_trace, get_catalog, growth_profile
from gftlab.utils.output import write_table

BOUNDARY_COLUMNS = ["name", "r", "theta", "re", "im"]
PROFILE_COLUMNS = ["name", "r", "dist_max", "growth_M", "product"]


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "plot",
        parents=parents,
        help="Emit plot data as a table",
        description="boundary: θ ↦ φ(r·e^{iθ}); profile: r ↦ dist_max·growth_M.",
    )
    parser.add_argument("--kind", choices=("boundary", "profile"), default="boundary")
    parser.add_argument("--phi", choices=[p.value for p in PhiName], help="Default: every class")
    parser.add_argument("--radius", type=float, default=1.0, help="Trace radius for boundary")
    parser.add_argument("--samples", type=int, default=256)


def handle(config: CliConfig, args: argparse.Namespace, stream: TextIO) -> int:
    names = [PhiName(args.phi)] if args.phi else list(get_catalog())
    rows = []
    for name in names:
        if args.kind == "boundary":
            rows.extend(boundary_trace(name, args.radius, args.samples))
        else:
            rows.extend(growth_profile(name, args.samples))
    columns = BOUNDARY_COLUMNS if args.kind == "boundary" else PROFILE_COLUMNS
    write_table(rows, columns, config.format.value, stream, f"plot {args.kind}")
    return 0
