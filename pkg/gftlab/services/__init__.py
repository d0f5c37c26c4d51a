"""Services package."""

from gftlab.services import (
    analytic_core,
    class_oracles,
    errata,
    maminda_catalog,
    radius_lab,
    schwarz_bounds,
    sufficiency,
)

__all__ = [
    "analytic_core",
    "class_oracles",
    "errata",
    "maminda_catalog",
    "radius_lab",
    "schwarz_bounds",
    "sufficiency",
]
