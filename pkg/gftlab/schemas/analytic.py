"""
Pydantic v2 value types for analytic functions on the unit disk.

Numerical carriers are frozen models; the document types are the UTF-8 JSON
shapes read and written by the CLI.
"""

import enum
from typing import Any, Callable, List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class Provenance(str, enum.Enum):
    CLOSED_FORM = "closed_form"
    SERIES = "series"
    QUADRATURE = "quadrature"


def as_complex(z: Any) -> np.ndarray:
    """Cast scalars or arrays to complex so principal branches apply everywhere."""
    return np.asarray(z, dtype=complex)


class AnalyticMap(BaseModel):
    """
    Uniform carrier for f, φ, ω and extremal functions.

    ``eval``, ``deriv1`` and ``deriv2`` must accept numpy arrays of complex
    points and broadcast elementwise.  Call through :meth:`value`, :meth:`d1`
    and :meth:`d2`, which cast the input to complex first.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    eval: Callable[..., Any]
    deriv1: Callable[..., Any]
    deriv2: Callable[..., Any]
    provenance: Provenance
    label: str = ""

    def value(self, z: Any) -> np.ndarray:
        return self.eval(as_complex(z))

    def d1(self, z: Any) -> np.ndarray:
        return self.deriv1(as_complex(z))

    def d2(self, z: Any) -> np.ndarray:
        return self.deriv2(as_complex(z))


class PowerSeries(BaseModel):
    """
    Truncated normalized Taylor series f(z) = z + a_{n+1} z^{n+1} + … + a_N z^N.

    ``coeffs`` holds a_1..a_N.  Short inputs are zero-padded so that
    ``truncation_N ≥ order_n + 1`` always holds.
    """

    model_config = ConfigDict(frozen=True)

    coeffs: Tuple[complex, ...] = Field(..., min_length=1)
    order_n: int = Field(default=1, ge=1)

    @model_validator(mode="before")
    @classmethod
    def pad_coefficients(cls, data: Any) -> Any:
        if isinstance(data, dict) and "coeffs" in data:
            order_n = int(data.get("order_n", 1))
            coeffs = list(data["coeffs"])
            coeffs += [0j] * max(0, order_n + 1 - len(coeffs))
            data = {**data, "coeffs": tuple(coeffs)}
        return data

    @model_validator(mode="after")
    def check_normalization(self) -> "PowerSeries":
        if self.coeffs[0] != 1:
            raise ValueError(f"a_1 must equal 1, got {self.coeffs[0]}.")
        for k in range(2, self.order_n + 1):
            if self.coeffs[k - 1] != 0:
                raise ValueError(f"a_{k} must vanish for a member of A_{self.order_n}.")
        return self

    @property
    def truncation_N(self) -> int:
        return len(self.coeffs)

    def coefficient_array(self) -> np.ndarray:
        """Ascending coefficients including the zero constant term."""
        return np.concatenate(([0j], np.asarray(self.coeffs, dtype=complex)))


class PowerSeriesDocument(BaseModel):
    """On-disk form of a normalized series: coeffs[0] is a_1 and must equal [1, 0]."""

    n: int = Field(default=1, ge=1, description="Index of the class A_n")
    coeffs: List[Tuple[float, float]] = Field(..., min_length=1)

    model_config = ConfigDict(
        json_schema_extra={
            "example": {"n": 1, "coeffs": [[1.0, 0.0], [0.25, 0.0]]},
        }
    )

    @field_validator("coeffs")
    @classmethod
    def leading_coefficient_is_one(cls, v: List[Tuple[float, float]]) -> List[Tuple[float, float]]:
        if tuple(v[0]) != (1.0, 0.0):
            raise ValueError("coeffs[0] is a_1 and must equal [1, 0].")
        return v

    def to_series(self) -> PowerSeries:
        return PowerSeries(coeffs=tuple(complex(re, im) for re, im in self.coeffs), order_n=self.n)

    @classmethod
    def from_series(cls, s: PowerSeries) -> "PowerSeriesDocument":
        return cls(n=s.order_n, coeffs=[(c.real, c.imag) for c in s.coeffs])


class PerturbationDocument(BaseModel):
    """Coefficients g_0, g_1, … of the analytic perturbation fed to the double integral."""

    coeffs: List[Tuple[float, float]] = Field(..., min_length=1)

    model_config = ConfigDict(
        json_schema_extra={"example": {"coeffs": [[0.07, 0.0]]}},
    )

    def complex_coeffs(self) -> np.ndarray:
        return np.asarray([complex(re, im) for re, im in self.coeffs])
