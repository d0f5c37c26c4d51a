"""Validated configuration for one CLI invocation."""

import enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from gftlab.config import settings


class Command(str, enum.Enum):
    RADII = "radii"
    VERIFY = "verify"
    MEMBER = "member"
    CONSTRUCT = "construct"
    CATALOG = "catalog"
    PLOT = "plot"


class OutputFormat(str, enum.Enum):
    CSV = "csv"
    JSON = "json"


class CliConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    command: Command
    format: OutputFormat = OutputFormat.CSV
    tol: Optional[float] = Field(default_factory=lambda: settings.default_tol, gt=0)
    guard: float = Field(default_factory=lambda: settings.guard, gt=0, lt=1)
    angles: int = Field(default_factory=lambda: settings.angles, ge=64)
    seed: int = Field(default_factory=lambda: settings.seed)
