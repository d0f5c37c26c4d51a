"""
Ma–Minda catalog — the nine target functions φ, their disk radii and extremal functions.

Each entry carries φ with its first two derivatives, the radius r1 of the
largest disk centred at 1 inside φ(D), the closed form of
max_{|z|=r} |φ(z) − 1|, and the growth bound max_{|z|=r} |f0| of the
extremal function f0(z) = z·exp ∫₀^z (φ(t) − 1)/t dt.

Extremal functions are taken in closed form where one exists (L, RL, C, ℘,
Ne) and otherwise through the structural formula, evaluated by Gauss–Legendre
quadrature along the segment [0, z].  All square roots, powers and logarithms
use principal branches, which give the value +1 at z = 0.

The catalog is built once and is read-only afterwards.
"""

import logging
import math
from functools import lru_cache
from types import MappingProxyType
from typing import Any, Callable, Dict, List, Mapping, Optional, Union

import numpy as np
from scipy.optimize import minimize_scalar

from gftlab.config import settings
from gftlab.exceptions import DomainError, NotFoundError
from gftlab.schemas.analytic import AnalyticMap, Provenance, as_complex
from gftlab.schemas.catalog import MaMindaEntry, PhiName
from gftlab.utils.quadrature import adaptive_unit_integral

logger = logging.getLogger(__name__)

SQRT2 = math.sqrt(2.0)
K_RL = 2.0 * (SQRT2 - 1.0)
NameLike = Union[str, PhiName]


# ── Structural formula ────────────────────────────────────────────────────────

def _log_ratio(phi: AnalyticMap, z: np.ndarray, tol: float) -> np.ndarray:
    """∫₀^z (φ(t) − 1)/t dt written as ∫₀¹ (φ(sz) − 1)/s ds."""
    slope = complex(phi.d1(0.0))
    zz = z[..., None]

    def integrand(s: np.ndarray) -> np.ndarray:
        t = zz * s
        with np.errstate(divide="ignore", invalid="ignore"):
            quotient = (phi.value(t) - 1.0) / s
        # removable singularity: (φ(sz) − 1)/s → φ′(0)·z
        return np.where(np.abs(t) < 1e-8, slope * zz, quotient)

    return adaptive_unit_integral(integrand, tol)


def structural_f0(phi: AnalyticMap, z: Any, tol: Optional[float] = None) -> Any:
    """
    Extremal function z·exp(∫₀^z (φ(t) − 1)/t dt) of the class S*(φ).

    Parameters
    ----------
    phi: Target function with φ(0) = 1.
    z:   Point or array of points with |z| < 1.
    tol: Quadrature tolerance (defaults to ``settings.quad_tol``).

    Raises
    ------
    DomainError
        If |z| ≥ 1 or φ(0) ≠ 1.
    AccuracyError
        If the line integral does not converge.
    """
    z = as_complex(z)
    if np.any(np.abs(z) >= 1.0):
        raise DomainError("structural_f0 is evaluated on |z| < 1.")
    if abs(complex(phi.value(0.0)) - 1.0) > 1e-12:
        raise DomainError("The structural formula needs φ(0) = 1.")
    value = z * np.exp(_log_ratio(phi, np.atleast_1d(z), tol or settings.quad_tol)).reshape(z.shape)
    return complex(value) if value.ndim == 0 else value


def _extremal_map(
    phi: AnalyticMap,
    fn: Callable[[np.ndarray], np.ndarray],
    provenance: Provenance,
    label: str,
) -> AnalyticMap:
    """Attach f0′ = f0·φ/z and f0″ = f0(φ² − φ + zφ′)/z² to an f0 evaluator."""
    slope = complex(phi.d1(0.0))

    def d1(z: np.ndarray) -> np.ndarray:
        small = np.abs(z) < 1e-12
        safe = np.where(small, 1.0, z)
        return np.where(small, 1.0 + 0j, fn(z) * phi.value(z) / safe)

    def d2(z: np.ndarray) -> np.ndarray:
        small = np.abs(z) < 1e-12
        safe = np.where(small, 1.0, z)
        w = phi.value(z)
        return np.where(
            small, 2.0 * slope, fn(z) * (w * w - w + z * phi.d1(z)) / safe**2
        )

    return AnalyticMap(eval=fn, deriv1=d1, deriv2=d2, provenance=provenance, label=label)


def structural_map(phi: AnalyticMap, label: str = "f0") -> AnalyticMap:
    """f0 as an AnalyticMap evaluated by quadrature."""
    return _extremal_map(phi, lambda z: structural_f0(phi, z), Provenance.QUADRATURE, label)


# ── Target functions ──────────────────────────────────────────────────────────

def _phi(fn, d1, d2, label: str) -> AnalyticMap:
    return AnalyticMap(eval=fn, deriv1=d1, deriv2=d2, provenance=Provenance.CLOSED_FORM, label=label)


def _rl_ratio(z: np.ndarray) -> np.ndarray:
    return np.sqrt((1.0 - z) / (1.0 + K_RL * z))


def _rl_d1(z: np.ndarray) -> np.ndarray:
    v = _rl_ratio(z)
    m1 = -(1.0 + K_RL) / (1.0 + K_RL * z) ** 2
    return -(SQRT2 - 1.0) * m1 / (2.0 * v)


def _rl_d2(z: np.ndarray) -> np.ndarray:
    v = _rl_ratio(z)
    m1 = -(1.0 + K_RL) / (1.0 + K_RL * z) ** 2
    m2 = 2.0 * K_RL * (1.0 + K_RL) / (1.0 + K_RL * z) ** 3
    return -(SQRT2 - 1.0) * (m2 / (2.0 * v) - m1 * m1 / (4.0 * v**3))


def _sigmoid(z: np.ndarray) -> np.ndarray:
    return 1.0 / (1.0 + np.exp(-z))


PHI_L = _phi(
    lambda z: np.sqrt(1.0 + z),
    lambda z: 0.5 / np.sqrt(1.0 + z),
    lambda z: -0.25 / (1.0 + z) ** 1.5,
    "sqrt(1+z)",
)
PHI_E = _phi(np.exp, np.exp, np.exp, "exp(z)")
PHI_RL = _phi(
    lambda z: SQRT2 - (SQRT2 - 1.0) * _rl_ratio(z),
    _rl_d1,
    _rl_d2,
    "sqrt2-(sqrt2-1)sqrt((1-z)/(1+2(sqrt2-1)z))",
)
PHI_C = _phi(
    lambda z: 1.0 + 4.0 * z / 3.0 + 2.0 * z**2 / 3.0,
    lambda z: 4.0 / 3.0 + 4.0 * z / 3.0,
    lambda z: np.full_like(z, 4.0 / 3.0),
    "1+4z/3+2z^2/3",
)
PHI_S = _phi(lambda z: 1.0 + np.sin(z), np.cos, lambda z: -np.sin(z), "1+sin(z)")
PHI_CR = _phi(
    lambda z: z + np.sqrt(1.0 + z**2),
    lambda z: 1.0 + z / np.sqrt(1.0 + z**2),
    lambda z: (1.0 + z**2) ** -1.5,
    "z+sqrt(1+z^2)",
)
PHI_SG = _phi(
    lambda z: 2.0 * _sigmoid(z),
    lambda z: 2.0 * _sigmoid(z) * (1.0 - _sigmoid(z)),
    lambda z: 2.0 * _sigmoid(z) * (1.0 - _sigmoid(z)) * (1.0 - 2.0 * _sigmoid(z)),
    "2/(1+exp(-z))",
)
PHI_WP = _phi(
    lambda z: 1.0 + z * np.exp(z),
    lambda z: (1.0 + z) * np.exp(z),
    lambda z: (2.0 + z) * np.exp(z),
    "1+z*exp(z)",
)
PHI_NE = _phi(
    lambda z: 1.0 + z - z**3 / 3.0,
    lambda z: 1.0 - z**2,
    lambda z: -2.0 * z,
    "1+z-z^3/3",
)


# ── Closed-form extremal functions ────────────────────────────────────────────

def _f0_l(z: np.ndarray) -> np.ndarray:
    root = np.sqrt(1.0 + z)
    return 4.0 * z * np.exp(2.0 * root - 2.0) / (1.0 + root) ** 2


def _f0_rl(z: np.ndarray) -> np.ndarray:
    a = np.sqrt(1.0 - z)
    b = np.sqrt(1.0 + K_RL * z)
    k_root = math.sqrt(K_RL)
    p0 = k_root * np.arctan(k_root * (b - a) / (b + K_RL * a))
    return z * ((a + b) / 2.0) ** K_RL * np.exp(p0)


def _f0_c(z: np.ndarray) -> np.ndarray:
    return z * np.exp(4.0 * z / 3.0 + z**2 / 3.0)


def _f0_wp(z: np.ndarray) -> np.ndarray:
    return z * np.exp(np.exp(z) - 1.0)


def _f0_ne(z: np.ndarray) -> np.ndarray:
    return z * np.exp(z - z**3 / 9.0)


# ── Distance profiles and growth ──────────────────────────────────────────────

def _dist_rl(r: float) -> float:
    if 1.0 - K_RL * r <= 0.0:
        raise DomainError(f"RL distance needs 1 − 2(√2−1)r > 0, got r = {r}.")
    return abs(SQRT2 - (SQRT2 - 1.0) * math.sqrt((1.0 + r) / (1.0 - K_RL * r)) - 1.0)


@lru_cache(maxsize=4096)
def _structural_growth(name: PhiName, r: float) -> float:
    return float(np.real(structural_f0(get_entry(name).phi, r)))


def _boundary_distance(phi: AnalyticMap, samples: int = 4096) -> float:
    """min over θ of |φ(e^{iθ}) − 1| for φ continuous up to the unit circle."""
    theta = np.linspace(0.0, np.pi, samples)
    values = np.abs(phi.value(np.exp(1j * theta)) - 1.0)
    k = int(np.argmin(values))
    h = np.pi / (samples - 1)
    polish = minimize_scalar(
        lambda t: float(np.abs(phi.value(np.exp(1j * t)) - 1.0)),
        bounds=(max(0.0, theta[k] - h), min(np.pi, theta[k] + h)),
        method="bounded",
        options={"xatol": 1e-12},
    )
    return float(min(values[k], polish.fun))


def _build_entries() -> List[MaMindaEntry]:
    e = math.e
    return [
        MaMindaEntry(
            name=PhiName.SG, description="modified sigmoid", phi=PHI_SG,
            r1=(e - 1.0) / (e + 1.0),
            dist_max=lambda r: math.tan(r / 2.0), dist_formula="tan(r/2)",
            growth_M=lambda r: _structural_growth(PhiName.SG, r),
        ),
        MaMindaEntry(
            name=PhiName.E, description="exponential", phi=PHI_E,
            r1=1.0 - 1.0 / e,
            dist_max=lambda r: math.expm1(r), dist_formula="e^r-1",
            growth_M=lambda r: _structural_growth(PhiName.E, r),
        ),
        MaMindaEntry(
            name=PhiName.S, description="sine", phi=PHI_S,
            r1=math.sin(1.0),
            dist_max=math.sinh, dist_formula="sinh(r)",
            growth_M=lambda r: _structural_growth(PhiName.S, r),
        ),
        MaMindaEntry(
            name=PhiName.L, description="lemniscate of Bernoulli", phi=PHI_L,
            r1=SQRT2 - 1.0,
            dist_max=lambda r: 1.0 - math.sqrt(1.0 - r), dist_formula="1-sqrt(1-r)",
            f0_closed=_extremal_map(PHI_L, _f0_l, Provenance.CLOSED_FORM, "f0_L"),
            growth_M=lambda r: float(np.real(_f0_l(np.complex128(r)))),
        ),
        MaMindaEntry(
            name=PhiName.NE, description="nephroid", phi=PHI_NE,
            r1=2.0 / 3.0,
            dist_max=lambda r: r + r**3 / 3.0, dist_formula="r+r^3/3",
            f0_closed=_extremal_map(PHI_NE, _f0_ne, Provenance.CLOSED_FORM, "f0_Ne"),
            growth_M=lambda r: r * math.exp(r - r**3 / 9.0),
        ),
        MaMindaEntry(
            name=PhiName.C, description="cardioid", phi=PHI_C,
            r1=2.0 / 3.0,
            dist_max=lambda r: 4.0 * r / 3.0 + 2.0 * r**2 / 3.0, dist_formula="4r/3+2r^2/3",
            f0_closed=_extremal_map(PHI_C, _f0_c, Provenance.CLOSED_FORM, "f0_C"),
            growth_M=lambda r: r * math.exp(4.0 * r / 3.0 + r**2 / 3.0),
        ),
        MaMindaEntry(
            name=PhiName.CR, description="crescent", phi=PHI_CR,
            r1=2.0 - SQRT2,
            dist_max=lambda r: r + math.sqrt(1.0 + r * r) - 1.0, dist_formula="r+sqrt(1+r^2)-1",
            growth_M=lambda r: _structural_growth(PhiName.CR, r),
        ),
        MaMindaEntry(
            name=PhiName.WP, description="cardioid 1+z·e^z", phi=PHI_WP,
            r1=1.0 / e,
            dist_max=lambda r: r * math.exp(r), dist_formula="r*e^r",
            f0_closed=_extremal_map(PHI_WP, _f0_wp, Provenance.CLOSED_FORM, "f0_wp"),
            growth_M=lambda r: r * math.exp(math.expm1(r)),
        ),
        MaMindaEntry(
            name=PhiName.RL, description="left half of the lemniscate", phi=PHI_RL,
            r1=_boundary_distance(PHI_RL), r1_tabulated=False,
            dist_max=_dist_rl, dist_formula="|phi0(-r)-1|",
            f0_closed=_extremal_map(PHI_RL, _f0_rl, Provenance.CLOSED_FORM, "f0_RL"),
            growth_M=lambda r: float(np.abs(_f0_rl(np.complex128(r)))),
        ),
    ]


# ── Public API ────────────────────────────────────────────────────────────────

@lru_cache
def get_catalog() -> Mapping[PhiName, MaMindaEntry]:
    """Return the immutable catalog keyed by name (built on first use)."""
    entries = {entry.name: entry for entry in _build_entries()}
    logger.debug("Ma–Minda catalog built with %d entries", len(entries))
    return MappingProxyType(entries)


def get_entry(name: NameLike) -> MaMindaEntry:
    """
    Look up a catalog entry.

    Raises
    ------
    NotFoundError
        If ``name`` is not one of the nine catalog names.
    """
    try:
        key = PhiName(name)
    except ValueError:
        raise NotFoundError(f"Unknown Ma–Minda class '{name}'.") from None
    return get_catalog()[key]


def table_names() -> List[PhiName]:
    """Names whose disk radius is tabulated in closed form (all but RL)."""
    return [entry.name for entry in get_catalog().values() if entry.r1_tabulated]


def disk_radius_r1(name: NameLike) -> float:
    """Radius of the largest disk centred at 1 contained in φ(D)."""
    return get_entry(name).r1


def _check_radius(r: float) -> None:
    if not 0 < r < 1:
        raise DomainError(f"Radius must lie in (0, 1), got {r}.")


def dist_max(name: NameLike, r: float) -> float:
    """max over |z| = r of |φ(z) − 1|, in closed form."""
    _check_radius(r)
    return float(get_entry(name).dist_max(r))


def growth_M(name: NameLike, r: float) -> float:
    """max over |z| = r of |f0(z)| for the extremal function of S*(φ)."""
    _check_radius(r)
    return float(get_entry(name).growth_M(r))


def extremal_map(name: NameLike) -> AnalyticMap:
    """f0 as an AnalyticMap: closed form where available, structural otherwise."""
    entry = get_entry(name)
    if entry.f0_closed is not None:
        return entry.f0_closed
    return structural_map(entry.phi, label=f"f0_{entry.name.value}")


# ── Plot data ─────────────────────────────────────────────────────────────────

def boundary_trace(name: NameLike, r: float = 1.0, samples: int = 256) -> List[Dict[str, float]]:
    """Rows (theta, re, im) of φ(r·e^{iθ}) on ``samples`` equally spaced angles, 0 < r ≤ 1."""
    if not 0 < r <= 1:
        raise DomainError(f"Trace radius must lie in (0, 1], got {r}.")
    entry = get_entry(name)
    theta = 2.0 * np.pi * np.arange(samples) / samples
    values = entry.phi.value(r * np.exp(1j * theta))
    return [
        {"name": entry.name.value, "r": r, "theta": float(t), "re": float(w.real), "im": float(w.imag)}
        for t, w in zip(theta, values)
    ]


def growth_profile(name: NameLike, samples: int = 64, upper: float = 0.95) -> List[Dict[str, float]]:
    """Rows (r, dist_max, growth_M, product) on r = upper·k/samples, k = 1..samples."""
    entry = get_entry(name)
    rows = []
    for r in upper * np.arange(1, samples + 1) / samples:
        d, m = dist_max(entry.name, float(r)), growth_M(entry.name, float(r))
        rows.append({"name": entry.name.value, "r": float(r), "dist_max": d, "growth_M": m, "product": d * m})
    return rows
