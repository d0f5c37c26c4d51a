from gftlab.schemas.analytic import (
    AnalyticMap,
    PerturbationDocument,
    PowerSeries,
    PowerSeriesDocument,
    Provenance,
    as_complex,
)
from gftlab.schemas.catalog import (
    MaMindaEntry,
    PhiName,
    RadiusProblem,
    SchwarzFamily,
    SchwarzSample,
    Target,
)
from gftlab.schemas.cli import CliConfig, Command, OutputFormat
from gftlab.schemas.reports import (
    CircleSup,
    ClassParams,
    DiskGrid,
    EmpiricalRadius,
    Erratum,
    MembershipReport,
    RadiusRow,
    RootResult,
    SuiteResult,
    Variant,
    VerificationReport,
)

__all__ = [
    "AnalyticMap",
    "CircleSup",
    "ClassParams",
    "CliConfig",
    "Command",
    "DiskGrid",
    "EmpiricalRadius",
    "Erratum",
    "MaMindaEntry",
    "MembershipReport",
    "OutputFormat",
    "PerturbationDocument",
    "PhiName",
    "PowerSeries",
    "PowerSeriesDocument",
    "Provenance",
    "RadiusProblem",
    "RadiusRow",
    "RootResult",
    "SchwarzFamily",
    "SchwarzSample",
    "SuiteResult",
    "Target",
    "Variant",
    "VerificationReport",
    "as_complex",
]
