"""
Schwarz-function inequalities and the positivity machinery of the Ω → G½,½ radius.

Bounds are scalar functions of (|ω(z)|, |z|) so they can be composed; the
sampled Schwarz families below check them against actual functions.

Composition
-----------
At a point with |ω(z)| = ω and |z| = r the G½,½ functional of a member of Ω
is majorized by

    r·[(2 + C)·P + r·(2 + ω)·Q] / (2(1 − ω) − C)²

where C is the crescent bound, P the Schwarz–Pick bound at ω and
Q = (1 − L²)/(1 − r²) with L the lower Dieudonné bound.  Clearing
denominators gives N/((1 − r²)D²) and Φ = (1 − r²)D² − N, so the majorant
stays below 1 exactly where Φ > 0.
"""

import logging
import math
from typing import List, Tuple

import numpy as np
from numpy.polynomial import Polynomial

from gftlab.exceptions import DomainError
from gftlab.schemas.analytic import AnalyticMap, Provenance
from gftlab.schemas.catalog import SchwarzFamily, SchwarzSample
from gftlab.schemas.reports import SuiteResult

logger = logging.getLogger(__name__)

DIEUDONNE_KNEE = math.sqrt(2.0) - 1.0
SLACK = 1e-9


def _check_r(r: float) -> None:
    if not 0 <= r < 1:
        raise DomainError(f"Radius must lie in [0, 1), got {r}.")


def _clamp_modulus(mod_omega: float, r: float) -> float:
    # |ω(z)| ≤ |z| up to rounding
    if mod_omega < 0 or mod_omega > r + 1e-12:
        raise DomainError(f"Schwarz lemma requires 0 ≤ |ω| ≤ r, got |ω|={mod_omega}, r={r}.")
    return min(mod_omega, r)


# ── Pointwise bounds ──────────────────────────────────────────────────────────

def schwarz_pick_bound(mod_omega: float, r: float) -> float:
    """(1 − |ω|²)/(1 − r²), the admissible upper bound for |ω′(z)|."""
    _check_r(r)
    if not 0 <= mod_omega <= 1:
        raise DomainError(f"|ω| must lie in [0, 1], got {mod_omega}.")
    return (1.0 - mod_omega**2) / (1.0 - r**2)


def dieudonne_deriv_bound(r: float) -> float:
    """Sharp bound for |ω′| over all Schwarz functions at |z| = r."""
    if not 0 < r < 1:
        raise DomainError(f"Radius must lie in (0, 1), got {r}.")
    if r <= DIEUDONNE_KNEE:
        return 1.0
    return (1.0 + r**2) ** 2 / (4.0 * r * (1.0 - r**2))


def dieudonne_lower(mod_omega: float, r: float) -> float:
    """(|ω| − r²)(1 + |ω|)/(r(1 − r²)), the admissible lower bound for |ω′|."""
    if r == 0:
        raise DomainError("The lower Dieudonné bound is undefined at r = 0.")
    _check_r(r)
    m = _clamp_modulus(mod_omega, r)
    return (m - r**2) * (1.0 + m) / (r * (1.0 - r**2))


def dieudonne_crescent(mod_omega: float, r: float) -> float:
    """(r² − |ω|²)/(1 − r²), the admissible upper bound for |zω′ − ω|."""
    _check_r(r)
    m = _clamp_modulus(mod_omega, r)
    return (r**2 - m**2) / (1.0 - r**2)


# ── Φ(ω, r) and its coefficients ──────────────────────────────────────────────

A_POLY = Polynomial([10, 3, -32, -4, 22, 1, -4])
B_POLY = Polynomial([-8, 0, 23, 0, -25, 0, 11])
C_POLY = Polynomial([4, -2, -18, 3, 27, -1, -11])

# First positive roots in (0, 1).  With B² − 4AC < 0 the coefficients A and C
# share a sign, so the side condition r < r₂ is C > 0.
DISCRIMINANT_ROOT = 0.430496
SIDE_CONDITION_ROOT = 0.565244
A_ROOT = 0.701363


def abc_coeffs(r: float) -> Tuple[float, float, float]:
    """Coefficients of ω², ω and 1 in Φ(ω, r)."""
    _check_r(r)
    return float(A_POLY(r)), float(B_POLY(r)), float(C_POLY(r))


def discriminant_poly() -> Polynomial:
    """B² − 4AC as a polynomial in r."""
    return B_POLY**2 - 4 * A_POLY * C_POLY


def capital_phi_coeffs(r: float) -> np.ndarray:
    """Ascending coefficients of Φ as a quintic in ω."""
    a, b, c = abc_coeffs(r)
    return np.array([c, b, a, 1.0 - 3.0 * r**4, r**3 - 3.0 * r**2 - r + 5.0, 1.0])


def capital_phi(omega: float, r: float) -> float:
    """Φ(ω, r) = ω⁵ + (r³ − 3r² − r + 5)ω⁴ + (1 − 3r⁴)ω³ + Aω² + Bω + C."""
    if not 0 <= omega <= r + 1e-12:
        raise DomainError(f"Φ is defined for 0 ≤ ω ≤ r, got ω={omega}, r={r}.")
    return float(Polynomial(capital_phi_coeffs(r))(omega))


def composed_majorant(omega: float, r: float) -> float:
    """Majorant of the G½,½ functional built directly from the pointwise bounds."""
    crescent = dieudonne_crescent(omega, r)
    upper = schwarz_pick_bound(omega, r)
    lower = dieudonne_lower(omega, r)
    second = (1.0 - lower**2) / (1.0 - r**2)
    return r * ((2.0 + crescent) * upper + r * second * (2.0 + omega)) / (
        2.0 * (1.0 - omega) - crescent
    ) ** 2


def _numerator(omega: float, r: float) -> float:
    return (
        r**6 * omega + 2 * r**6 - r**5 * omega**2 + r**5 - r**4 * omega**3
        - 4 * r**4 * omega**2 - 7 * r**4 * omega - 6 * r**4 - r**3 * omega**4
        + 4 * r**3 * omega**2 - 3 * r**3 + 2 * r**2 * omega**4 + 8 * r**2 * omega**3
        + 10 * r**2 * omega**2 + 5 * r**2 * omega + 2 * r**2 + r * omega**4
        - 3 * r * omega**2 + 2 * r - omega**5 - 4 * omega**4 - 5 * omega**3 - 2 * omega**2
    )


def _denominator_root(omega: float, r: float) -> float:
    return 2 * r**2 * omega - 3 * r**2 + omega**2 - 2 * omega + 2


def expanded_majorant(omega: float, r: float) -> float:
    """The majorant after clearing denominators: N/((1 − r²)D²)."""
    _check_r(r)
    return _numerator(omega, r) / ((1.0 - r**2) * _denominator_root(omega, r) ** 2)


def phi_from_majorant(omega: float, r: float) -> float:
    """(1 − r²)D² − N, which must coincide with Φ(ω, r)."""
    return (1.0 - r**2) * _denominator_root(omega, r) ** 2 - _numerator(omega, r)


def first_positive_root(poly: Polynomial) -> float:
    """Smallest real root of ``poly`` in (0, 1)."""
    roots = poly.roots()
    real = sorted(x.real for x in roots if abs(x.imag) < 1e-10 and 0 < x.real < 1)
    if not real:
        raise DomainError("Polynomial has no real root in (0, 1).")
    return real[0]


# ── Sampled Schwarz functions ─────────────────────────────────────────────────

def _automorphism(w: complex):
    """u ↦ (u − w)/(1 − w̄u) with its first and second derivatives."""
    wc, scale = np.conj(w), 1.0 - abs(w) ** 2
    return (
        lambda u: (u - w) / (1.0 - wc * u),
        lambda u: scale / (1.0 - wc * u) ** 2,
        lambda u: 2.0 * wc * scale / (1.0 - wc * u) ** 3,
    )


def power_sample(k: int) -> SchwarzSample:
    omega = AnalyticMap(
        eval=lambda z: z**k,
        deriv1=lambda z: k * z ** (k - 1),
        deriv2=lambda z: k * (k - 1) * z ** (k - 2) if k > 1 else np.zeros_like(z),
        provenance=Provenance.CLOSED_FORM,
        label=f"z^{k}",
    )
    return SchwarzSample(omega=omega, family_tag=SchwarzFamily.POWER)


def scaled_atom_sample(c: complex) -> SchwarzSample:
    omega = AnalyticMap(
        eval=lambda z: c * z,
        deriv1=lambda z: np.full_like(z, c),
        deriv2=lambda z: np.zeros_like(z),
        provenance=Provenance.CLOSED_FORM,
        label=f"{c:.3g}z",
    )
    return SchwarzSample(omega=omega, family_tag=SchwarzFamily.SCALED_ATOM)


def blaschke_sample(a: complex, b: complex) -> SchwarzSample:
    """
    Two-factor Blaschke product post-composed with a disk automorphism so ω(0) = 0.

    ω = τ ∘ B with B = φ_a·φ_b and τ the automorphism sending B(0) to 0.
    """
    pa, da, dda = _automorphism(a)
    pb, db, ddb = _automorphism(b)
    tau, dtau, ddtau = _automorphism(a * b)  # B(0) = a·b

    def blaschke(z):
        return pa(z) * pb(z)

    def blaschke_d1(z):
        return da(z) * pb(z) + pa(z) * db(z)

    def omega(z):
        return tau(blaschke(z))

    def omega_d1(z):
        return dtau(blaschke(z)) * blaschke_d1(z)

    def omega_d2(z):
        b0, b1 = blaschke(z), blaschke_d1(z)
        b2 = dda(z) * pb(z) + 2.0 * da(z) * db(z) + pa(z) * ddb(z)
        return ddtau(b0) * b1**2 + dtau(b0) * b2

    sample = AnalyticMap(
        eval=omega, deriv1=omega_d1, deriv2=omega_d2,
        provenance=Provenance.CLOSED_FORM, label=f"blaschke({a:.3g},{b:.3g})",
    )
    return SchwarzSample(omega=sample, family_tag=SchwarzFamily.BLASCHKE_PRODUCT)


def _random_disk_point(rng: np.random.Generator, max_modulus: float) -> complex:
    return complex(max_modulus * math.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform()))


def sample_schwarz_functions(count: int = 50, seed: int = 7) -> List[SchwarzSample]:
    """Seeded mix of powers z^k, scaled atoms cz and composed Blaschke products."""
    rng = np.random.default_rng(seed)
    samples: List[SchwarzSample] = []
    for i in range(count):
        kind = i % 3
        if kind == 0:
            samples.append(power_sample(1 + int(rng.integers(0, 6))))
        elif kind == 1:
            samples.append(scaled_atom_sample(_random_disk_point(rng, 1.0)))
        else:
            samples.append(
                blaschke_sample(_random_disk_point(rng, 0.95), _random_disk_point(rng, 0.95))
            )
    return samples


# ── Suite ─────────────────────────────────────────────────────────────────────

def check_sample(sample: SchwarzSample, points: np.ndarray) -> List[str]:
    """Violations of the four pointwise bounds for one sampled ω at the given points."""
    omega = sample.omega
    violations: List[str] = []
    values, slopes = omega.value(points), omega.d1(points)
    for z, w, dw in zip(points, values, slopes):
        r, m, mod_dw = abs(z), min(abs(w), abs(z)), abs(dw)
        checks = {
            "schwarz-pick": schwarz_pick_bound(m, r) - mod_dw,
            "dieudonne-deriv": dieudonne_deriv_bound(r) - mod_dw,
            "dieudonne-lower": mod_dw - dieudonne_lower(m, r),
            "dieudonne-crescent": dieudonne_crescent(m, r) - abs(z * dw - w),
        }
        for name, slack in checks.items():
            if slack < -SLACK:
                violations.append(f"{omega.label} {name} at z={z:.4g}: slack {slack:.3e}")
    return violations


def run_bounds_suite(seed: int = 7, samples: int = 50, points: int = 100) -> SuiteResult:
    """
    Check every pointwise bound on sampled Schwarz functions, Φ > 0 below r₀,
    and the first roots of B² − 4AC, C and A.
    """
    rng = np.random.default_rng(seed)
    result = SuiteResult(name="bounds")
    for sample in sample_schwarz_functions(samples, seed):
        radii = rng.uniform(0.05, 0.95, size=points)
        z = radii * np.exp(2j * np.pi * rng.uniform(size=points))
        found = check_sample(sample, z)
        result.checks += 4 * points
        result.violations += len(found)
        result.details.extend(found[:3])

    for r in np.linspace(0.005, 0.43, 87):
        for omega in np.linspace(0.0, r, 25):
            result.checks += 1
            if capital_phi(float(omega), float(r)) <= 0:
                result.violations += 1
                result.details.append(f"Φ({omega:.4f}, {r:.4f}) ≤ 0")

    for label, poly, expected in (
        ("B^2-4AC", discriminant_poly(), DISCRIMINANT_ROOT),
        ("C", C_POLY, SIDE_CONDITION_ROOT),
        ("A", A_POLY, A_ROOT),
    ):
        result.checks += 1
        root = first_positive_root(poly)
        if abs(root - expected) > 1e-4:
            result.violations += 1
            result.details.append(f"first root of {label} is {root:.6f}, expected {expected}")

    logger.info(
        "Bounds suite: %d checks, %d violations (seed=%d)",
        result.checks, result.violations, seed,
    )
    return result

