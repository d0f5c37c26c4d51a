"""
Centralized configuration management using Pydantic BaseSettings.

Every numerical default (grid sizes, tolerances, seeds) is environment-driven via
``GFT_``-prefixed variables or a ``.env`` file, so a verification run can be
reproduced exactly from its environment.
"""

from functools import lru_cache
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Toolkit settings loaded from environment variables or .env file.

    ``GFT_DEFAULT_TOL`` overrides the per-problem comparison tolerance of the
    radius catalog; leave it unset to use 1e-4 (5e-3 for three-digit constants).
    """

    model_config = SettingsConfigDict(
        env_prefix="GFT_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # ── Application ──────────────────────────────────────────────────
    app_name: str = "gftlab"
    log_level: str = "WARNING"

    # ── Tolerances ───────────────────────────────────────────────────
    default_tol: Optional[float] = Field(
        default=None,
        description="Comparison tolerance override for radius constants",
    )
    root_tol: float = 1e-12
    scan_step: float = 0.005
    quad_tol: float = 1e-10
    pole_eps: float = 1e-12
    marginal_band: float = 1e-9

    @field_validator("default_tol", "root_tol", "quad_tol", "pole_eps")
    @classmethod
    def validate_positive(cls, v: Optional[float]) -> Optional[float]:
        if v is not None and v <= 0:
            raise ValueError("Tolerances must be positive.")
        return v

    @field_validator("scan_step")
    @classmethod
    def validate_scan_step(cls, v: float) -> float:
        if not 0 < v <= 0.01:
            raise ValueError("scan_step must lie in (0, 0.01].")
        return v

    # ── Sampling grids ───────────────────────────────────────────────
    guard: float = 0.999
    angles: int = 4096
    suite_angles: int = 256

    @field_validator("guard")
    @classmethod
    def validate_guard(cls, v: float) -> float:
        if not 0 < v < 1:
            raise ValueError("guard radius must lie strictly inside the unit disk.")
        return v

    @field_validator("angles", "suite_angles")
    @classmethod
    def validate_angles(cls, v: int) -> int:
        if v < 64:
            raise ValueError("At least 64 angular nodes are required.")
        return v

    # ── Quadrature ───────────────────────────────────────────────────
    quad_nodes: int = 32
    quad_check_nodes: int = 48

    # ── Property suites ──────────────────────────────────────────────
    seed: int = 7


@lru_cache
def get_settings() -> Settings:
    """Return cached Settings instance (singleton pattern)."""
    return Settings()


settings = get_settings()
