"""``verify`` — radius reproduction plus the seeded property suites."""

import argparse
from typing import Any, Dict, List, TextIO

from gftlab.commands.common import disk_grid
from gftlab.schemas.cli import CliConfig
from gftlab.schemas.reports import VerificationReport
from gftlab.services.radius_lab import SHARPNESS_TOL, SUITES, verify_all
from gftlab.utils.output import write_table

CHOICES = ("all", "radii", *SUITES)
COLUMNS = ["kind", "id", "computed", "expected", "abs_diff", "checks", "violations", "within", "detail"]
MAX_DETAILS = 5


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "verify",
        parents=parents,
        help="Run radius and property verification",
        description="Deterministic pass/fail table; the same seed gives identical output.",
    )
    parser.add_argument("--suite", choices=CHOICES, default="all")


def _rows(report: VerificationReport) -> List[Dict[str, Any]]:
    rows: List[Dict[str, Any]] = []
    for row in report.rows:
        sharp_ok = row.sharpness_residual is None or row.sharpness_residual <= SHARPNESS_TOL
        rows.append({
            "kind": "radius",
            "id": row.id,
            "computed": row.computed,
            "expected": row.expected,
            "abs_diff": row.abs_diff,
            "within": row.within and sharp_ok,
            "detail": None if sharp_ok else f"sharpness residual {row.sharpness_residual:.3g}",
        })
    for suite in report.suites:
        rows.append({
            "kind": "suite",
            "id": suite.name,
            "checks": suite.checks,
            "violations": suite.violations,
            "within": suite.passed,
            "detail": "; ".join(suite.details[:MAX_DETAILS]) or None,
        })
    for erratum in report.errata:
        rows.append({"kind": "erratum", "id": erratum.id, "detail": erratum.implemented})
    return rows


def handle(config: CliConfig, args: argparse.Namespace, stream: TextIO) -> int:
    grid = disk_grid(config)
    if args.suite == "all":
        report = verify_all(config.tol, config.seed, grid=grid)
    elif args.suite == "radii":
        report = verify_all(config.tol, config.seed, suites=(), grid=grid)
    else:
        report = verify_all(config.tol, config.seed, suites=(args.suite,), radii=False)
    write_table(_rows(report), COLUMNS, config.format.value, stream, f"verify {args.suite}")
    return 0 if report.passed else 1
