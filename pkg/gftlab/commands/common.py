"""Helpers shared by the subcommands."""

from typing import Any, Dict

from gftlab.schemas.cli import CliConfig
from gftlab.schemas.reports import DiskGrid, MembershipReport

REPORT_COLUMNS = [
    "test", "satisfied", "sup_value", "threshold", "r", "theta", "tail_bound", "marginal", "caveat",
    "diagnostic",
]


def disk_grid(config: CliConfig) -> DiskGrid:
    """The default radii below the guard circle, sampled with the configured angles."""
    radii = tuple(r for r in DiskGrid.model_fields["radii"].default if r < config.guard)
    return DiskGrid(radii=radii, angular=config.angles, guard=config.guard)


def report_row(test: str, report: MembershipReport, tail_bound: float) -> Dict[str, Any]:
    """Flatten a report; ``tail_bound`` is the truncation bound of the input series at the guard."""
    r, theta = report.argmax
    return {
        "test": test, **report.model_dump(exclude={"argmax"}), "r": r, "theta": theta,
        "tail_bound": tail_bound,
    }
