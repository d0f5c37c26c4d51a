"""``catalog`` — the Ma–Minda table, optionally with inclusion results for (λ, α)."""

import argparse
from typing import TextIO

from gftlab.exceptions import DomainError
from gftlab.schemas.cli import CliConfig
from gftlab.services.class_oracles import inclusion_table
from gftlab.services.maminda_catalog import get_catalog
from gftlab.utils.output import write_table

COLUMNS = ["name", "description", "r1", "r1_tabulated", "dist_formula", "f0"]


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "catalog",
        parents=parents,
        help="List the Ma–Minda classes",
        description="With --lambda and --alpha, adds whether G_(λ,α) ⊂ S*(φ) holds.",
    )
    parser.add_argument("--lambda", dest="lam", type=float)
    parser.add_argument("--alpha", type=float)


def handle(config: CliConfig, args: argparse.Namespace, stream: TextIO) -> int:
    columns = list(COLUMNS)
    included = {}
    if args.lam is not None or args.alpha is not None:
        if args.lam is None or args.alpha is None:
            raise DomainError("--lambda and --alpha must be given together.")
        included = inclusion_table(args.lam, args.alpha)
        columns.append("included")

    rows = []
    for entry in get_catalog().values():
        rows.append({
            "name": entry.name.value,
            "description": entry.description,
            "r1": entry.r1,
            "r1_tabulated": entry.r1_tabulated,
            "dist_formula": entry.dist_formula,
            "f0": "closed_form" if entry.f0_closed is not None else "quadrature",
            "included": included.get(entry.name),
        })
    write_table(rows, columns, config.format.value, stream, "catalog")
    return 0
