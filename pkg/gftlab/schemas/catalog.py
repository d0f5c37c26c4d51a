"""Catalog records: Ma–Minda target functions, radius problems and Schwarz samples."""

import enum
from typing import Callable, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from gftlab.schemas.analytic import AnalyticMap
from gftlab.schemas.reports import DiskGrid

RealFn = Callable[[float], float]
SharpnessFn = Callable[[float, Optional[DiskGrid]], float]


class PhiName(str, enum.Enum):
    L = "L"
    E = "e"
    RL = "RL"
    C = "C"
    S = "S"
    CR = "Cr"
    SG = "SG"
    WP = "wp"
    NE = "Ne"


class Target(str, enum.Enum):
    OMEGA = "omega"
    G_HALF = "g_half"


class MaMindaEntry(BaseModel):
    """One catalog row: φ, its disk radius r1, distance profile and extremal function."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: PhiName
    description: str
    phi: AnalyticMap
    r1: float = Field(..., gt=0, lt=1)
    r1_tabulated: bool = True
    dist_max: RealFn
    dist_formula: str
    f0_closed: Optional[AnalyticMap] = None
    growth_M: RealFn


class RadiusProblem(BaseModel):
    """A scalar defining function whose smallest positive root is a radius constant."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    id: str
    psi: RealFn
    bracket: Tuple[float, float]
    expected: float
    tolerance: float = 1e-4
    provenance: str
    description: str
    target: Target
    class_name: Optional[PhiName] = None
    sharp: bool = False
    sharpness_check: Optional[SharpnessFn] = None
    stated_psi: Optional[RealFn] = None
    erratum_id: Optional[str] = None

    @property
    def threshold(self) -> float:
        return 0.5 if self.target is Target.OMEGA else 1.0

    @model_validator(mode="after")
    def expected_inside_bracket(self) -> "RadiusProblem":
        lo, hi = self.bracket
        if not 0 < lo < self.expected < hi < 1:
            raise ValueError(f"{self.id}: expected root must lie inside the bracket.")
        return self


class SchwarzFamily(str, enum.Enum):
    POWER = "power"
    BLASCHKE_PRODUCT = "blaschke_product"
    SCALED_ATOM = "scaled_atom"


class SchwarzSample(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    omega: AnalyticMap
    family_tag: SchwarzFamily
