"""
Sampling specifications, class parameters and result records.

Reports are value objects: each one can be serialized straight into a CSV row
or a JSON document by the CLI.
"""

import enum
import math
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from gftlab.config import settings

CAVEAT = "grid-certified only"


class Variant(str, enum.Enum):
    THM1 = "thm1"
    THM2 = "thm2"


# ── Sampling ──────────────────────────────────────────────────────────────────

class DiskGrid(BaseModel):
    """Radial/angular sampling specification for sup-norm estimation on |z| ≤ r."""

    model_config = ConfigDict(frozen=True)

    radii: Tuple[float, ...] = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)
    angular: int = Field(default_factory=lambda: settings.angles, ge=64)
    guard: float = Field(default_factory=lambda: settings.guard, gt=0, lt=1)

    @field_validator("radii")
    @classmethod
    def radii_increasing(cls, v: Tuple[float, ...]) -> Tuple[float, ...]:
        if any(not 0 < r < 1 for r in v):
            raise ValueError("Every radius must lie in (0, 1).")
        if any(b <= a for a, b in zip(v, v[1:])):
            raise ValueError("Radii must be strictly increasing.")
        return v

    @model_validator(mode="after")
    def guard_is_outermost(self) -> "DiskGrid":
        if self.radii and self.guard < self.radii[-1]:
            raise ValueError("The guard radius must be the outermost radius.")
        return self


class ClassParams(BaseModel):
    """(λ, α, n) for G_{λ,α} over A_n; α ranges are enforced per operation."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    lam: float = Field(..., gt=0, alias="lambda")
    alpha: float
    n: int = Field(default=1, ge=1)


class CircleSup(BaseModel):
    """Maximum of a real functional on one circle, with its location."""

    value: float
    theta: float
    radius: float


class MembershipReport(BaseModel):
    """Outcome of a grid test of a strict inequality ``sup_value < threshold``."""

    satisfied: bool
    sup_value: float
    threshold: float
    argmax: Tuple[float, float] = (0.0, 0.0)
    caveat: str = CAVEAT
    marginal: bool = False
    diagnostic: Optional[str] = None

    @model_validator(mode="after")
    def satisfied_matches_comparison(self) -> "MembershipReport":
        if self.satisfied != (self.sup_value < self.threshold):
            raise ValueError("satisfied must equal (sup_value < threshold).")
        return self

    @classmethod
    def from_sup(cls, sup: CircleSup, threshold: float) -> "MembershipReport":
        return cls(
            satisfied=sup.value < threshold,
            sup_value=sup.value,
            threshold=threshold,
            argmax=(sup.radius, sup.theta),
            marginal=abs(sup.value - threshold) <= settings.marginal_band,
        )

    @classmethod
    def failed(cls, threshold: float, diagnostic: str, where: complex) -> "MembershipReport":
        return cls(
            satisfied=False,
            sup_value=math.inf,
            threshold=threshold,
            argmax=(abs(where), math.atan2(where.imag, where.real)),
            diagnostic=diagnostic,
        )


# ── Root finding ──────────────────────────────────────────────────────────────

class RootResult(BaseModel):
    root: float
    residual: float
    iterations: int
    function_calls: int = 0
    bracket_used: Tuple[float, float]

    @model_validator(mode="after")
    def root_in_bracket(self) -> "RootResult":
        lo, hi = self.bracket_used
        if not lo <= self.root <= hi:
            raise ValueError("root must lie inside the bracket used.")
        return self


class EmpiricalRadius(BaseModel):
    radius: float
    saturated: bool = Field(
        default=False,
        description="True when the functional stays below threshold on all of (0, 1)",
    )


# ── Verification ──────────────────────────────────────────────────────────────

class RadiusRow(BaseModel):
    id: str
    computed: float
    expected: float
    abs_diff: float
    tolerance: float
    within: bool
    sharp: bool
    sharpness_residual: Optional[float] = None
    residual: float
    iterations: int


class SuiteResult(BaseModel):
    name: str
    checks: int = 0
    violations: int = 0
    details: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.violations == 0


class Erratum(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: str
    stated: str
    implemented: str
    reason: str


class VerificationReport(BaseModel):
    rows: List[RadiusRow] = Field(default_factory=list)
    suites: List[SuiteResult] = Field(default_factory=list)
    errata: List[Erratum] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        rows_ok = all(r.within for r in self.rows)
        sharp_ok = all(
            r.sharpness_residual is None or r.sharpness_residual <= 1e-4 for r in self.rows
        )
        return rows_ok and sharp_ok and all(s.passed for s in self.suites)
