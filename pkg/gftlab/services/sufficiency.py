"""
Sufficiency — coefficient-free thresholds for membership in G_{λ,α} and
constructions of members through double integrals.

Threshold
---------
δ is the smallest positive root of

    (1+n)(2αn − λ(n+1) − n)r² + n(1−α+n)(2λ(n+1) + n + αn²)r − λn²(n+1−α)²,

computed from the rationalized root formula, which is stable whatever the
sign of the leading coefficient.  If
|zf″ − α(f′ − f/z)| < δ on the disk then f ∈ G_{λ,α}; if
|zf″ − α(f′ − 1)| is below the contracted threshold the same holds.

Construction
------------
f(z) = z + z^{n+1}·∬₀¹ g(rsz) r^{e₁} s^{e₂} dr ds solves the corresponding
differential equation with right-hand side z^n g(z).  The weights r^{e₁}
and s^{e₂} are absorbed by Gauss–Jacobi rules, so the thm2 exponent
e₁ = n − 1 − α < 0 is integrated as accurately as thm1.
"""

import logging
import math
from typing import Dict, List, Optional, Tuple

import numpy as np
from numpy.polynomial import Polynomial

from gftlab.config import settings
from gftlab.exceptions import AccuracyError, DomainError
from gftlab.schemas.analytic import AnalyticMap, Provenance, as_complex
from gftlab.schemas.reports import ClassParams, DiskGrid, MembershipReport, SuiteResult, Variant
from gftlab.services.analytic_core import polynomial_map, sup_on_circle
from gftlab.utils.quadrature import tensor_unit_rule

logger = logging.getLogger(__name__)

EXPONENTS = {
    Variant.THM1: lambda n, a: (n - a, n - 1.0),
    Variant.THM2: lambda n, a: (n - 1.0 - a, float(n)),
}


def _check_condition_params(p: ClassParams) -> None:
    if not 0 <= p.alpha < 1:
        raise DomainError(f"The sufficient conditions need 0 ≤ α < 1, got {p.alpha}.")


# ── Thresholds ────────────────────────────────────────────────────────────────

def threshold_quadratic(p: ClassParams) -> Polynomial:
    """The quadratic whose smallest positive root is δ."""
    lam, a, n = p.lam, p.alpha, p.n
    return Polynomial([
        -lam * n**2 * (n + 1 - a) ** 2,
        n * (1 - a + n) * (2 * lam * (n + 1) + n + a * n**2),
        (1 + n) * (2 * a * n - lam * (n + 1) - n),
    ])


def delta_threshold(p: ClassParams) -> float:
    """
    Sufficient-condition threshold δ for G_{λ,α} over A_n.

    Raises
    ------
    DomainError
        If α ∉ [0, 1).
    AccuracyError
        If the computed δ fails the quadratic residual or the strict bound
        δ(n+1) < n(n+1−α).
    """
    _check_condition_params(p)
    lam, a, n = p.lam, p.alpha, p.n
    radicand = (
        n**2 + a**2 * n**4 + 2 * a * n**3
        + 8 * a * lam * n + 12 * a * lam * n**2 + 4 * a * lam * n**3
    )
    delta = 2 * lam * n * (n + 1 - a) / (n + a * n**2 + 2 * lam * (n + 1) + math.sqrt(radicand))

    quadratic = threshold_quadratic(p)
    scale = max(1.0, float(np.max(np.abs(quadratic.coef))))
    residual = abs(quadratic(delta))
    if residual > 1e-10 * scale:
        raise AccuracyError(f"δ = {delta} leaves residual {residual:.3e}", estimate=residual)
    if not delta * (n + 1) < n * (n + 1 - a):
        raise AccuracyError(f"δ = {delta} violates δ(n+1) < n(n+1−α).", estimate=delta)
    return delta


def thm2_threshold(p: ClassParams) -> float:
    """Threshold for |zf″ − α(f′ − 1)|: δ contracted by (n+1)(n−α)/(α + (n+1)(n−α))."""
    if p.n <= p.alpha:
        raise DomainError(f"The second condition needs n > α, got n={p.n}, α={p.alpha}.")
    delta = delta_threshold(p)
    factor = (p.n + 1) * (p.n - p.alpha)
    return delta * factor / (p.alpha + factor)


def variant_threshold(p: ClassParams, variant: Variant) -> float:
    return delta_threshold(p) if variant is Variant.THM1 else thm2_threshold(p)


def modulus_bounds(p: ClassParams, bound: float) -> Tuple[float, float]:
    """1 ∓ bound/(n(n+1−α)): the range of |f/z| implied by the first condition."""
    spread = bound / (p.n * (p.n + 1 - p.alpha))
    return 1.0 - spread, 1.0 + spread


# ── Construction ──────────────────────────────────────────────────────────────

def build_double_integral_fn(
    g: AnalyticMap,
    p: ClassParams,
    variant: Variant = Variant.THM1,
    nodes: Optional[int] = None,
    check_nodes: Optional[int] = None,
) -> AnalyticMap:
    """
    Member f(z) = z + z^{n+1}·∬ g(rsz) r^{e₁} s^{e₂} dr ds of A_n.

    The rule with ``nodes``² points is compared against ``check_nodes``² points
    on a probe circle of radius 0.95.

    Raises
    ------
    AccuracyError
        If the two rules disagree by more than ``settings.quad_tol``.
    """
    _check_condition_params(p)
    variant = Variant(variant)
    n = p.n
    e1, e2 = EXPONENTS[variant](n, p.alpha)
    nodes = nodes or settings.quad_nodes
    check_nodes = check_nodes or settings.quad_check_nodes

    rs, w = tensor_unit_rule(nodes, e1, e2)
    probe = 0.95 * np.exp(2j * np.pi * np.arange(16) / 16)
    rs_check, w_check = tensor_unit_rule(check_nodes, e1, e2)
    coarse = g.value(probe[:, None] * rs) @ w
    fine = g.value(probe[:, None] * rs_check) @ w_check
    gap = float(np.max(np.abs(coarse - fine)))
    if gap > settings.quad_tol * max(1.0, float(np.max(np.abs(fine)))):
        raise AccuracyError(
            f"Double integral changes by {gap:.3e} between {nodes}² and {check_nodes}² nodes.",
            estimate=gap,
        )
    logger.debug("Double integral (%s, n=%d) stable to %.2e", variant.value, n, gap)

    derivatives = (g.value, g.d1, g.d2)

    def moments(z: np.ndarray, order: int) -> List[np.ndarray]:
        # k-th moment: ∬ g^(k)(rsz) (rs)^k r^e1 s^e2
        zz = z[..., None] * rs
        return [(derivatives[k](zz) * rs**k) @ w for k in range(order + 1)]

    def f(z):
        z = as_complex(z)
        zz = np.atleast_1d(z)
        (i0,) = moments(zz, 0)
        return (zz + zz ** (n + 1) * i0).reshape(z.shape)

    def f1(z):
        z = as_complex(z)
        zz = np.atleast_1d(z)
        i0, i1 = moments(zz, 1)
        return (1.0 + (n + 1) * zz**n * i0 + zz ** (n + 1) * i1).reshape(z.shape)

    def f2(z):
        z = as_complex(z)
        zz = np.atleast_1d(z)
        i0, i1, i2 = moments(zz, 2)
        out = n * (n + 1) * zz ** (n - 1) * i0 + 2 * (n + 1) * zz**n * i1 + zz ** (n + 1) * i2
        return out.reshape(z.shape)

    return AnalyticMap(
        eval=f, deriv1=f1, deriv2=f2,
        provenance=Provenance.QUADRATURE,
        label=f"double-integral[{variant.value}, n={n}, alpha={p.alpha:g}]",
    )


# ── Condition check ───────────────────────────────────────────────────────────

def condition_values(f: AnalyticMap, p: ClassParams, variant: Variant, z: np.ndarray) -> np.ndarray:
    """|zf″ − α(f′ − f/z)| for thm1, |zf″ − α(f′ − 1)| for thm2."""
    z = as_complex(z)
    w1, w2 = f.d1(z), f.d2(z)
    inner = w1 - f.value(z) / z if Variant(variant) is Variant.THM1 else w1 - 1.0
    return np.abs(z * w2 - p.alpha * inner)


def check_sufficient_condition(
    f: AnalyticMap,
    p: ClassParams,
    variant: Variant = Variant.THM1,
    grid: Optional[DiskGrid] = None,
) -> MembershipReport:
    """Compare the sup of the condition's left-hand side on the guard circle with its threshold."""
    grid = grid or DiskGrid()
    variant = Variant(variant)
    threshold = variant_threshold(p, variant)
    sup = sup_on_circle(lambda z: condition_values(f, p, variant, z), grid.guard, grid)
    return MembershipReport.from_sup(sup, threshold)


# ── Suite ─────────────────────────────────────────────────────────────────────

def random_perturbation(
    rng: np.random.Generator, bound: float, max_degree: int = 3
) -> AnalyticMap:
    """Random polynomial g with Σ|g_k| = bound, hence sup|g| ≤ bound on the disk."""
    degree = int(rng.integers(0, max_degree + 1))
    coeffs = rng.normal(size=degree + 1) + 1j * rng.normal(size=degree + 1)
    coeffs *= bound / np.sum(np.abs(coeffs))
    return polynomial_map(coeffs, label=f"g(deg={degree})")


def sample_members(
    p: ClassParams, count: int, seed: int, variant: Variant = Variant.THM1
) -> List[AnalyticMap]:
    """Members built from seeded perturbations at 90% of the variant's threshold."""
    rng = np.random.default_rng(seed)
    bound = 0.9 * variant_threshold(p, variant)
    return [
        build_double_integral_fn(random_perturbation(rng, bound), p, variant)
        for _ in range(count)
    ]


def run_sufficiency_suite(seed: int = 7, samples: int = 20) -> SuiteResult:
    """
    Round trip: perturbations below 0.9·threshold give functions that satisfy
    the condition, the |f/z| bounds and the G_{λ,α} test.
    """
    from gftlab.services.class_oracles import in_G

    rng = np.random.default_rng(seed)
    grid = DiskGrid(angular=settings.suite_angles)
    result = SuiteResult(name="sufficiency")
    plan: Dict[Variant, int] = {Variant.THM1: samples, Variant.THM2: max(1, samples // 2)}
    for variant, count in plan.items():
        for _ in range(count):
            p = ClassParams(
                lam=float(rng.uniform(0.05, 1.0)),
                alpha=float(rng.uniform(0.05, 0.95)),
                n=int(rng.integers(1, 4)),
            )
            bound = variant_threshold(p, variant)
            f = build_double_integral_fn(random_perturbation(rng, 0.9 * bound), p, variant)
            checks = {
                "condition": check_sufficient_condition(f, p, variant, grid).satisfied,
                "in_G": in_G(f, p, grid).satisfied,
            }
            if variant is Variant.THM1:
                low, high = modulus_bounds(p, bound)
                z = grid.guard * np.exp(2j * np.pi * np.arange(grid.angular) / grid.angular)
                ratio = np.abs(f.value(z) / z)
                checks["modulus"] = bool(np.all((ratio > low) & (ratio < high)))
            for name, ok in checks.items():
                result.checks += 1
                if not ok:
                    result.violations += 1
                    result.details.append(f"{variant.value} {name} failed for {p!r}")
    logger.info("Sufficiency suite: %d checks, %d violations", result.checks, result.violations)
    return result
