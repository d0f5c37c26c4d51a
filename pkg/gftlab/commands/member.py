"""``member`` — grid-certified membership of a series in Ω, G_{λ,α} or S*(φ)."""

import argparse
from typing import TextIO

from gftlab.commands.common import REPORT_COLUMNS, disk_grid, report_row
from gftlab.exceptions import DomainError
from gftlab.schemas.analytic import PowerSeriesDocument
from gftlab.schemas.catalog import PhiName
from gftlab.schemas.cli import CliConfig
from gftlab.schemas.reports import ClassParams
from gftlab.services.analytic_core import series_map, truncation_tail_bound
from gftlab.services.class_oracles import in_G, in_omega, in_sstar_disk
from gftlab.utils.documents import load_document
from gftlab.utils.output import write_table


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "member",
        parents=parents,
        help="Test a power series for class membership",
        description="Sup of the class functional on the guard circle against its threshold.",
    )
    parser.add_argument("--class", dest="klass", choices=("omega", "g", "sstar"), required=True)
    parser.add_argument("--series", required=True, help="PowerSeries JSON document")
    parser.add_argument("--lambda", dest="lam", type=float, help="λ for --class g")
    parser.add_argument("--alpha", type=float, help="α for --class g")
    parser.add_argument("--phi", choices=[p.value for p in PhiName], help="φ for --class sstar")


def handle(config: CliConfig, args: argparse.Namespace, stream: TextIO) -> int:
    document = load_document(args.series, PowerSeriesDocument)
    series = document.to_series()
    f = series_map(series)
    grid = disk_grid(config)

    if args.klass == "omega":
        report, test = in_omega(f, grid), "omega"
    elif args.klass == "g":
        if args.lam is None or args.alpha is None:
            raise DomainError("--class g needs --lambda and --alpha.")
        params = ClassParams(lam=args.lam, alpha=args.alpha, n=document.n)
        report, test = in_G(f, params, grid), f"G({args.lam:g},{args.alpha:g})"
    else:
        if args.phi is None:
            raise DomainError("--class sstar needs --phi.")
        report, test = in_sstar_disk(f, PhiName(args.phi), grid), f"S*({args.phi})"

    row = report_row(test, report, truncation_tail_bound(series, grid.guard))
    write_table([row], REPORT_COLUMNS, config.format.value, stream, "member")
    return 0 if report.satisfied else 1
