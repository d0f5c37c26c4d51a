"""Tests for membership oracles, the subordination test and the inclusion predicates."""

import math

import numpy as np
import pytest

from gftlab.exceptions import DomainError
from gftlab.schemas.catalog import PhiName
from gftlab.schemas.reports import ClassParams, DiskGrid
from gftlab.services.analytic_core import mobius_map, polynomial_map
from gftlab.services.class_oracles import (
    OMEGA_INCLUSION_FACTOR,
    build_omega_member,
    in_G,
    in_omega,
    in_sstar_disk,
    inclusion_G_in_Omega,
    inclusion_G_in_Sphi,
    inclusion_table,
    omega_inclusion_bound,
    run_inclusion_suite,
    subordination_disk_test,
    subordination_radius,
)
from gftlab.services.maminda_catalog import table_names

GUARDS = (0.3, 0.5, 0.7, 0.9)


# ── Ω ─────────────────────────────────────────────────────────────────────────

class TestOmega:
    def test_identity_is_member(self, identity, coarse_grid):
        report = in_omega(identity, coarse_grid)
        assert report.satisfied
        assert report.sup_value == pytest.approx(0.0, abs=1e-15)
        assert report.caveat == "grid-certified only"

    def test_koebe_is_not_member(self, koebe, coarse_grid):
        assert not in_omega(koebe, coarse_grid).satisfied

    def test_constructed_member(self, coarse_grid):
        # φ(z) = z² gives zf′ − f = z⁴/2
        f = build_omega_member(polynomial_map([0, 0, 1]))
        report = in_omega(f, coarse_grid)
        assert report.satisfied
        assert report.sup_value == pytest.approx(0.5 * coarse_grid.guard**4, abs=1e-12)

    def test_linear_source_member(self):
        # φ(ζ) = ζ gives f = z + z³/4
        f = build_omega_member(polynomial_map([0, 1]))
        z = np.array([0.3, -0.2 + 0.4j, 0.5j, 0.6 * np.exp(2j)])
        np.testing.assert_allclose(f.value(z), z + z**3 / 4, atol=1e-13)
        np.testing.assert_allclose(f.d1(z), 1 + 3 * z**2 / 4, atol=1e-13)

    def test_sup_grows_with_guard(self):
        f = polynomial_map([0, 1, 0.3, 0.2])
        sups = [
            in_omega(f, DiskGrid(radii=(0.1,), angular=128, guard=g)).sup_value
            for g in GUARDS
        ]
        assert all(b >= a - 1e-12 for a, b in zip(sups, sups[1:]))

    def test_marginal_flag(self):
        # |zf′ − f| = a|z|², with a chosen so the sup lands on 1/2
        guard = 0.9
        f = polynomial_map([0, 1, 0.5 / guard**2])
        report = in_omega(f, DiskGrid(radii=(0.5,), angular=64, guard=guard))
        assert report.marginal
        assert report.sup_value == pytest.approx(0.5, abs=1e-12)


# ── G_{λ,α} ───────────────────────────────────────────────────────────────────

class TestG:
    def test_mobius_member(self, coarse_grid):
        report = in_G(mobius_map(0.5), ClassParams(lam=0.25, alpha=0.5), coarse_grid)
        assert report.satisfied
        assert report.sup_value == pytest.approx(0.25 * coarse_grid.guard, abs=1e-12)

    def test_mobius_non_member(self, coarse_grid):
        assert not in_G(mobius_map(0.5), ClassParams(lam=0.2, alpha=0.5), coarse_grid).satisfied

    def test_pole_becomes_failed_report(self):
        # f′ = 1 + 2z vanishes at −1/2, a node of the guard circle
        f = polynomial_map([0, 1, 1])
        grid = DiskGrid(radii=(0.1, 0.2), angular=64, guard=0.5)
        report = in_G(f, ClassParams(lam=0.5, alpha=0.5), grid)
        assert not report.satisfied
        assert report.diagnostic is not None
        assert math.isinf(report.sup_value)

    def test_membership_shrinks_with_guard(self):
        f = polynomial_map([0, 1, 0.1])
        p = ClassParams(lam=0.5, alpha=0.5)
        reports = [in_G(f, p, DiskGrid(radii=(0.1,), angular=128, guard=g)) for g in GUARDS]
        sups = [r.sup_value for r in reports]
        assert all(b >= a - 1e-12 for a, b in zip(sups, sups[1:]))
        # once a guard fails, every larger guard fails too
        flags = [r.satisfied for r in reports]
        assert flags == sorted(flags, reverse=True)

    def test_alpha_zero_rejected(self, identity):
        with pytest.raises(DomainError):
            in_G(identity, ClassParams(lam=0.5, alpha=0.0))


# ── S*(φ) and subordination ───────────────────────────────────────────────────

class TestStarlikeAndSubordination:
    @pytest.mark.parametrize("name", list(PhiName))
    def test_identity_in_every_class(self, identity, coarse_grid, name):
        assert in_sstar_disk(identity, name, coarse_grid).satisfied

    def test_disk_test_threshold_is_r1(self, coarse_grid):
        f = polynomial_map([0, 1, 0.5])
        report = in_sstar_disk(f, PhiName.C, coarse_grid)
        assert report.threshold == pytest.approx(2 / 3)

    def test_zero_of_f_becomes_failed_report(self):
        # f = z(1 + 2z) vanishes at −1/2, the node θ = π of the guard circle
        f = polynomial_map([0, 1, 2])
        grid = DiskGrid(radii=(0.1, 0.2), angular=64, guard=0.5)
        report = in_sstar_disk(f, PhiName.E, grid)
        assert not report.satisfied
        assert math.isinf(report.sup_value)
        assert "vanishes" in report.diagnostic
        assert report.argmax[0] == pytest.approx(0.5, abs=1e-12)
        assert report.argmax[1] == pytest.approx(math.pi, abs=1e-12)

    def test_subordination_extremal(self, coarse_grid):
        # |f/(zf′) − 1| = c|z| for f = z/(1 − cz)
        report = subordination_disk_test(mobius_map(0.5), 0.5, coarse_grid)
        assert report.satisfied
        assert report.sup_value == pytest.approx(0.5 * coarse_grid.guard, abs=1e-12)

    def test_subordination_radius(self):
        assert subordination_radius(ClassParams(lam=0.25, alpha=0.5)) == pytest.approx(0.5)

    def test_subordination_radius_domain(self, identity):
        with pytest.raises(DomainError):
            subordination_disk_test(identity, 1.0)


# ── Inclusions ────────────────────────────────────────────────────────────────

class TestInclusions:
    def test_omega_threshold(self):
        alpha = 0.9
        edge = OMEGA_INCLUSION_FACTOR * (3 * alpha - 1)
        assert inclusion_G_in_Omega(edge * 0.999, alpha)
        assert not inclusion_G_in_Omega(edge, alpha)

    def test_omega_bound_is_half_at_threshold(self):
        alpha = 0.7
        lam = OMEGA_INCLUSION_FACTOR * (3 * alpha - 1)
        assert omega_inclusion_bound(lam, alpha) == pytest.approx(0.5, rel=1e-12)

    def test_alpha_domain(self):
        with pytest.raises(DomainError):
            inclusion_G_in_Omega(0.05, 1 / 3)

    def test_omega_alpha_interval_is_open(self):
        assert inclusion_G_in_Omega(0.05, 0.99)
        with pytest.raises(DomainError):
            inclusion_G_in_Omega(0.05, 1.0)

    def test_sphi_accepts_alpha_one(self):
        assert inclusion_G_in_Sphi(0.05, 1.0, 0.5)

    def test_sphi_condition(self):
        # (1 + r1)λ < (3α − 1)r1
        assert inclusion_G_in_Sphi(0.1, 0.9, 0.5)
        assert not inclusion_G_in_Sphi(0.6, 0.9, 0.5)

    def test_table_at_reference_parameters(self):
        table = inclusion_table(0.05, 0.9)
        assert list(table) == table_names()
        assert all(table.values())

    def test_table_sine_condition(self):
        alpha = 0.8
        lam = math.sin(1) * (3 * alpha - 1) / (1 + math.sin(1))
        assert inclusion_table(lam * 0.99, alpha)[PhiName.S]
        assert not inclusion_table(lam * 1.01, alpha)[PhiName.S]

    def test_suite_passes(self):
        result = run_inclusion_suite(seed=7)
        assert result.passed, result.details
        assert result.checks > 20
