"""
Analytic core — evaluation of normalized analytic functions and class functionals.

Functions on the unit disk are carried as :class:`AnalyticMap` objects whose
callables broadcast over numpy arrays, so a whole circle of 4096 nodes is one
vectorized evaluation.  Suprema over a circle are taken on a uniform angular
grid and polished around the discrete argmax with a bounded scalar
minimization (golden section with parabolic steps).
"""

import logging
from typing import Any, Callable, List, Optional, Sequence

import numpy as np
from numpy.polynomial import polynomial as P
from scipy.optimize import minimize_scalar

from gftlab.config import settings
from gftlab.exceptions import DomainError, PoleError
from gftlab.schemas.analytic import AnalyticMap, PowerSeries, Provenance, as_complex
from gftlab.schemas.reports import CircleSup, DiskGrid

logger = logging.getLogger(__name__)

RealOnDisk = Callable[[np.ndarray], np.ndarray]


def _check_disk(z: np.ndarray) -> None:
    if np.any(np.abs(z) >= 1.0):
        raise DomainError("Evaluation point must satisfy |z| < 1.")


def first_flagged(z: np.ndarray, mask: np.ndarray) -> complex:
    return complex(np.ravel(np.broadcast_to(z, mask.shape))[int(np.argmax(np.ravel(mask)))])


# ── Series ────────────────────────────────────────────────────────────────────

def horner(coeffs: Sequence[complex], z: Any) -> np.ndarray:
    """Evaluate Σ c_k z^k (ascending coefficients) by Horner's rule."""
    return P.polyval(as_complex(z), np.asarray(coeffs, dtype=complex))


def eval_series(s: PowerSeries, z: Any) -> complex:
    """
    Evaluate a truncated normalized series at a point of the open disk.

    Raises
    ------
    DomainError
        If |z| ≥ 1.
    """
    z = as_complex(z)
    _check_disk(z)
    value = horner(s.coefficient_array(), z)
    return complex(value) if value.ndim == 0 else value


def polynomial_map(coeffs: Sequence[complex], label: str = "polynomial") -> AnalyticMap:
    """AnalyticMap of Σ c_k z^k for ascending coefficients c_0, c_1, …."""
    c0 = np.asarray(coeffs, dtype=complex)
    c1 = P.polyder(c0) if c0.size > 1 else np.zeros(1, dtype=complex)
    c2 = P.polyder(c1) if c1.size > 1 else np.zeros(1, dtype=complex)
    return AnalyticMap(
        eval=lambda z: P.polyval(z, c0),
        deriv1=lambda z: P.polyval(z, c1),
        deriv2=lambda z: P.polyval(z, c2),
        provenance=Provenance.SERIES,
        label=label,
    )


def series_map(s: PowerSeries, label: str = "series") -> AnalyticMap:
    return polynomial_map(s.coefficient_array(), label=label)


def truncation_tail_bound(s: PowerSeries, r: float) -> float:
    """Bound r^{N+1}/(1−r)·max|a_k| on the discarded tail of a truncated series."""
    if not 0 < r < 1:
        raise DomainError(f"Radius must lie in (0, 1), got {r}.")
    return r ** (s.truncation_N + 1) / (1.0 - r) * float(np.max(np.abs(s.coeffs)))


def taylor_coefficients(f: AnalyticMap, count: int, radius: float = 0.5) -> np.ndarray:
    """
    Recover a_0..a_{count-1} from samples of f on the circle |z| = radius.

    Uses the discrete Fourier transform with 2·count nodes; aliasing from
    terms beyond 2·count is damped by radius^(2·count).
    """
    nodes = 2 * count
    theta = 2.0 * np.pi * np.arange(nodes) / nodes
    samples = f.value(radius * np.exp(1j * theta))
    coeffs = np.fft.fft(samples)[:count] / nodes
    return coeffs / radius ** np.arange(count)


# ── Class functionals ─────────────────────────────────────────────────────────

def g_values(f: AnalyticMap, z: Any, alpha: float) -> np.ndarray:
    """
    Vectorized |(1 − α + α z f″/f′)/(z f′/f) − (1 − α)|.

    Raises
    ------
    PoleError
        At the first point where |f| or |f′| drops below the pole guard.
    """
    z = as_complex(z)
    w, w1, w2 = f.value(z), f.d1(z), f.d2(z)
    bad = (np.abs(w) < settings.pole_eps) | (np.abs(w1) < settings.pole_eps)
    if np.any(bad):
        where = first_flagged(z, bad)
        raise PoleError(f"f or f' vanishes near z = {where:.6g}", location=where)
    ratio = z * w1 / w
    numerator = 1.0 - alpha + alpha * z * w2 / w1
    return np.abs(numerator / ratio - (1.0 - alpha))


def g_functional(f: AnalyticMap, z: complex, alpha: float) -> float:
    """
    The defining modulus of G_{λ,α} at one point.

    Parameters
    ----------
    f:     Normalized analytic function.
    z:     Point with 0 < |z| < 1.
    alpha: Class parameter in (0, 1].
    """
    if not 0 < alpha <= 1:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}.")
    if z == 0:
        raise DomainError("The G functional is evaluated at z ≠ 0.")
    return float(g_values(f, z, alpha))


def omega_values(f: AnalyticMap, z: Any) -> np.ndarray:
    z = as_complex(z)
    return np.abs(z * f.d1(z) - f.value(z))


def omega_functional(f: AnalyticMap, z: complex) -> float:
    """|z f′(z) − f(z)|, the defining modulus of the class Ω."""
    _check_disk(as_complex(z))
    return float(omega_values(f, z))


# ── Suprema on circles ────────────────────────────────────────────────────────

def sup_on_circle(g: RealOnDisk, r: float, grid: Optional[DiskGrid] = None) -> CircleSup:
    """
    Maximum of a real functional on the circle |z| = r.

    The functional is sampled on ``grid.angular`` equally spaced nodes and the
    discrete maximum is polished by bounded scalar minimization over the two
    neighbouring cells.  Errors raised by ``g`` at a node propagate unchanged.

    >>> round(sup_on_circle(np.abs, 0.7).value, 12)
    0.7
    """
    if not 0 < r < 1:
        raise DomainError(f"Radius must lie in (0, 1), got {r}.")
    angular = grid.angular if grid is not None else settings.angles
    if angular < 64:
        raise DomainError("At least 64 angular nodes are required.")
    theta = 2.0 * np.pi * np.arange(angular) / angular
    values = np.asarray(g(r * np.exp(1j * theta)), dtype=float)
    finite = np.isfinite(values)
    if not np.all(finite):
        where = complex(r * np.exp(1j * theta[int(np.argmin(finite))]))
        raise PoleError(f"Non-finite functional value at z = {where:.6g}", location=where)

    k = int(np.argmax(values))
    best_value, best_theta = float(values[k]), float(theta[k])
    h = 2.0 * np.pi / angular
    polish = minimize_scalar(
        lambda t: -float(np.real(g(r * np.exp(1j * t)))),
        bounds=(best_theta - h, best_theta + h),
        method="bounded",
        options={"xatol": 1e-12},
    )
    if polish.success and -polish.fun > best_value:
        best_value, best_theta = float(-polish.fun), float(polish.x % (2.0 * np.pi))
    return CircleSup(value=best_value, theta=best_theta, radius=r)


def radial_profile(g: RealOnDisk, grid: DiskGrid) -> List[CircleSup]:
    """Sup of ``g`` on every grid radius followed by the guard circle."""
    radii = list(grid.radii)
    if not radii or grid.guard > radii[-1]:
        radii.append(grid.guard)
    return [sup_on_circle(g, r, grid) for r in radii]


def closed_form_map(
    fn: Callable[[np.ndarray], np.ndarray],
    d1: Callable[[np.ndarray], np.ndarray],
    d2: Callable[[np.ndarray], np.ndarray],
    label: str,
) -> AnalyticMap:
    return AnalyticMap(eval=fn, deriv1=d1, deriv2=d2, provenance=Provenance.CLOSED_FORM, label=label)


def identity_map() -> AnalyticMap:
    return closed_form_map(
        lambda z: z,
        lambda z: np.ones_like(z),
        lambda z: np.zeros_like(z),
        label="identity",
    )


def koebe_map() -> AnalyticMap:
    """The Koebe function z/(1 − z)², the standard non-member test case."""
    return closed_form_map(
        lambda z: z / (1.0 - z) ** 2,
        lambda z: (1.0 + z) / (1.0 - z) ** 3,
        lambda z: (4.0 + 2.0 * z) / (1.0 - z) ** 4,
        label="koebe",
    )


def mobius_map(c: float) -> AnalyticMap:
    """z/(1 − cz), extremal for the subordination disk of G_{λ,α}."""
    return closed_form_map(
        lambda z: z / (1.0 - c * z),
        lambda z: 1.0 / (1.0 - c * z) ** 2,
        lambda z: 2.0 * c / (1.0 - c * z) ** 3,
        label=f"mobius(c={c:g})",
    )
