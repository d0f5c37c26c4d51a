"""
Class oracles — grid-certified membership in Ω, G_{λ,α} and S*(φ), the
subordination disk test, and the inclusion predicates.

Every oracle samples its functional on the guard circle (maximum modulus
principle) and compares strictly with the class threshold.  Reports carry a
"grid-certified only" caveat; values within ``settings.marginal_band`` of the
threshold are flagged as marginal.
"""

import logging
import math
from typing import Dict, Optional

import numpy as np

from gftlab.config import settings
from gftlab.exceptions import DomainError, PoleError
from gftlab.schemas.analytic import AnalyticMap, Provenance, as_complex
from gftlab.schemas.catalog import PhiName
from gftlab.schemas.reports import ClassParams, DiskGrid, MembershipReport, SuiteResult
from gftlab.services.analytic_core import first_flagged, g_values, omega_values, sup_on_circle
from gftlab.services.errata import ERRATA
from gftlab.services.maminda_catalog import disk_radius_r1, table_names
from gftlab.services.sufficiency import delta_threshold, sample_members
from gftlab.utils.quadrature import legendre_unit_rule

logger = logging.getLogger(__name__)

OMEGA_THRESHOLD = 0.5
OMEGA_INCLUSION_FACTOR = 2.0 - math.sqrt(3.0)


def _report(g, threshold: float, grid: DiskGrid) -> MembershipReport:
    report = MembershipReport.from_sup(sup_on_circle(g, grid.guard, grid), threshold)
    if report.marginal:
        logger.warning(
            "Boundary-marginal result: sup %.12g vs threshold %.12g",
            report.sup_value, report.threshold,
        )
    return report


# ── Membership oracles ────────────────────────────────────────────────────────

def in_omega(f: AnalyticMap, grid: Optional[DiskGrid] = None) -> MembershipReport:
    """|zf′ − f| < 1/2 on the guard circle."""
    grid = grid or DiskGrid()
    return _report(lambda z: omega_values(f, z), OMEGA_THRESHOLD, grid)


def in_G(f: AnalyticMap, p: ClassParams, grid: Optional[DiskGrid] = None) -> MembershipReport:
    """
    Sup of the G_{λ,α} functional on the guard circle compared with λ.

    A vanishing f or f′ on the circle gives an unsatisfied report with the
    pole location in ``diagnostic`` rather than an exception.
    """
    if not 0 < p.alpha <= 1:
        raise DomainError(f"G_(λ,α) is defined for 0 < α ≤ 1, got {p.alpha}.")
    grid = grid or DiskGrid()
    try:
        return _report(lambda z: g_values(f, z, p.alpha), p.lam, grid)
    except PoleError as exc:
        logger.info("Pole while testing G membership: %s", exc)
        return MembershipReport.failed(p.lam, str(exc), exc.location)


def _starlike_deviation(f: AnalyticMap, z: np.ndarray) -> np.ndarray:
    z = as_complex(z)
    w, w1 = f.value(z), f.d1(z)
    bad = np.abs(w) < settings.pole_eps
    if np.any(bad):
        where = first_flagged(z, bad)
        raise PoleError(f"f vanishes near z = {where:.6g}", location=where)
    return np.abs(z * w1 / w - 1.0)


def in_sstar_disk(
    f: AnalyticMap, name: PhiName, grid: Optional[DiskGrid] = None
) -> MembershipReport:
    """
    Disk-sufficient test for S*(φ): |zf′/f − 1| < r1(φ).

    A zero of f on the guard circle gives an unsatisfied report, as in :func:`in_G`.
    """
    grid = grid or DiskGrid()
    threshold = disk_radius_r1(name)
    try:
        return _report(lambda z: _starlike_deviation(f, z), threshold, grid)
    except PoleError as exc:
        logger.info("Pole while testing S*(%s) membership: %s", name.value, exc)
        return MembershipReport.failed(threshold, str(exc), exc.location)


def subordination_disk_test(
    f: AnalyticMap, c: float, grid: Optional[DiskGrid] = None
) -> MembershipReport:
    """
    zf′/f ≺ 1/(1 + cz), tested as |f/(zf′) − 1| < c on the guard circle.

    Raises
    ------
    PoleError
        If f′ vanishes on the circle.
    """
    if not 0 < c < 1:
        raise DomainError(f"The subordination radius c must lie in (0, 1), got {c}.")
    grid = grid or DiskGrid()

    def deviation(z):
        z = as_complex(z)
        w1 = f.d1(z)
        bad = np.abs(w1) < settings.pole_eps
        if np.any(bad):
            where = first_flagged(z, bad)
            raise PoleError(f"f' vanishes near z = {where:.6g}", location=where)
        return np.abs(f.value(z) / (z * w1) - 1.0)

    return _report(deviation, c, grid)


def subordination_radius(p: ClassParams) -> float:
    """c = λ/(3α − 1), the radius of the subordinating disk for G_{λ,α}."""
    _check_alpha(p.alpha)
    return p.lam / (3.0 * p.alpha - 1.0)


def build_omega_member(omega_src: AnalyticMap) -> AnalyticMap:
    """
    f(z) = z + ½·z·∫₀^z φ(ζ) dζ for a unit-bounded analytic φ; always in Ω.

    The primitive is z·∫₀¹ φ(sz) ds on 32 Gauss–Legendre nodes, exact for
    polynomial φ up to degree 63.
    """
    s, w = legendre_unit_rule(settings.quad_nodes)

    def primitive(z: np.ndarray) -> np.ndarray:
        zz = np.atleast_1d(z)
        return (zz * (omega_src.value(zz[..., None] * s) @ w)).reshape(z.shape)

    def f(z):
        return z + 0.5 * z * primitive(z)

    def f1(z):
        return 1.0 + 0.5 * primitive(z) + 0.5 * z * omega_src.value(z)

    def f2(z):
        return omega_src.value(z) + 0.5 * z * omega_src.d1(z)

    return AnalyticMap(
        eval=f, deriv1=f1, deriv2=f2, provenance=Provenance.QUADRATURE,
        label=f"omega-member[{omega_src.label}]",
    )


# ── Inclusion predicates ──────────────────────────────────────────────────────

def _check_alpha(alpha: float) -> None:
    if not 1.0 / 3.0 < alpha <= 1.0:
        raise DomainError(f"Inclusion results need 1/3 < α ≤ 1, got {alpha}.")


def inclusion_G_in_Omega(lam: float, alpha: float) -> bool:
    """G_{λ,α} ⊂ Ω iff λ < (2 − √3)(3α − 1), for 1/3 < α < 1."""
    if not 1.0 / 3.0 < alpha < 1.0:
        raise DomainError(f"G_(λ,α) ⊂ Ω needs 1/3 < α < 1, got {alpha}.")
    if lam <= 0:
        raise DomainError(f"λ must be positive, got {lam}.")
    return lam < OMEGA_INCLUSION_FACTOR * (3.0 * alpha - 1.0)


def omega_inclusion_bound(lam: float, alpha: float) -> float:
    """Bound c/(1 − c)² on |zf′ − f| for f ∈ G_{λ,α}, with c = λ/(3α − 1)."""
    c = subordination_radius(ClassParams(lam=lam, alpha=alpha))
    if c >= 1:
        raise DomainError("The bound needs λ < 3α − 1.")
    return c / (1.0 - c) ** 2


def inclusion_G_in_Sphi(lam: float, alpha: float, r1: float) -> bool:
    """
    G_{λ,α} ⊂ S*(φ) when (1 + r1)λ < (3α − 1)r1.

    This is λ/(3α − 1 − λ) < r1 rearranged: the disk |w − 1| < c/(1 − c)
    that contains zf′/f must fit inside the disk of radius r1 about 1.
    """
    _check_alpha(alpha)
    if lam <= 0:
        raise DomainError(f"λ must be positive, got {lam}.")
    if not 0 < r1 < 1:
        raise DomainError(f"r1 must lie in (0, 1), got {r1}.")
    return (1.0 + r1) * lam < (3.0 * alpha - 1.0) * r1


def inclusion_table(lam: float, alpha: float) -> Dict[PhiName, bool]:
    """Inclusion G_{λ,α} ⊂ S*(φ) for every class with a tabulated disk radius."""
    logger.debug("Sine relation uses %s", ERRATA["S-inclusion"].implemented)
    return {name: inclusion_G_in_Sphi(lam, alpha, disk_radius_r1(name)) for name in table_names()}


# ── Suite ─────────────────────────────────────────────────────────────────────

def run_inclusion_suite(seed: int = 7, samples: int = 20) -> SuiteResult:
    """
    Oracle/predicate consistency: pipeline-built members of G_{λ,α} pass
    in_omega whenever G ⊂ Ω, and pass the S*(φ) disk test for every true
    table relation at (λ, α) = (0.05, 0.9).
    """
    rng = np.random.default_rng(seed)
    grid = DiskGrid(angular=settings.suite_angles)
    result = SuiteResult(name="inclusion")

    for k in range(samples):
        alpha = float(rng.uniform(0.4, 0.95))
        lam = float(rng.uniform(0.05, 0.95)) * OMEGA_INCLUSION_FACTOR * (3.0 * alpha - 1.0)
        p = ClassParams(lam=lam, alpha=alpha)
        if not inclusion_G_in_Omega(lam, alpha):
            continue
        (member,) = sample_members(p, 1, seed + k)
        result.checks += 1
        report = in_omega(member, grid)
        if not report.satisfied:
            result.violations += 1
            result.details.append(f"in_omega failed at λ={lam:.4f}, α={alpha:.4f}")

    p = ClassParams(lam=0.05, alpha=0.9)
    members = sample_members(p, 5, seed)
    for name, included in inclusion_table(p.lam, p.alpha).items():
        if not included:
            continue
        for member in members:
            result.checks += 1
            if not in_sstar_disk(member, name, grid).satisfied:
                result.violations += 1
                result.details.append(f"S*({name.value}) disk test failed at (0.05, 0.9)")

    logger.info(
        "Inclusion suite: %d checks, %d violations (δ at (0.05, 0.9) = %.6f)",
        result.checks, result.violations, delta_threshold(p),
    )
    return result
