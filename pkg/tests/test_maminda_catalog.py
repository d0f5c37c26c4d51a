"""Tests for the Ma–Minda catalog: φ, disk radii, distance profiles and extremal functions."""

import math

import numpy as np
import pytest

from gftlab.exceptions import DomainError, NotFoundError
from gftlab.schemas.analytic import Provenance
from gftlab.schemas.catalog import PhiName
from gftlab.services.analytic_core import polynomial_map, sup_on_circle, taylor_coefficients
from gftlab.services.maminda_catalog import (
    PHI_C,
    boundary_trace,
    disk_radius_r1,
    dist_max,
    extremal_map,
    get_catalog,
    get_entry,
    growth_M,
    growth_profile,
    structural_f0,
    table_names,
)

ALL_NAMES = list(PhiName)
CLOSED_FORM = ["L", "RL", "C", "wp", "Ne"]


class TestCatalog:
    def test_nine_entries(self):
        assert set(get_catalog()) == set(PhiName)

    def test_table_excludes_rl(self):
        names = table_names()
        assert len(names) == 8
        assert PhiName.RL not in names

    def test_catalog_is_read_only(self):
        with pytest.raises(TypeError):
            get_catalog()[PhiName.E] = None

    @pytest.mark.parametrize(
        "name, r1",
        [
            ("e", 1 - 1 / math.e),
            ("L", math.sqrt(2) - 1),
            ("S", math.sin(1)),
            ("C", 2 / 3),
            ("Ne", 2 / 3),
            ("Cr", 2 - math.sqrt(2)),
            ("wp", 1 / math.e),
            ("SG", (math.e - 1) / (math.e + 1)),
        ],
    )
    def test_tabulated_r1(self, name, r1):
        assert disk_radius_r1(name) == pytest.approx(r1, rel=1e-15)

    def test_rl_r1_is_boundary_distance(self):
        assert disk_radius_r1("RL") == pytest.approx(0.285924, abs=1e-5)

    def test_unknown_name(self):
        with pytest.raises(NotFoundError):
            get_entry("P")

    @pytest.mark.parametrize("name", ALL_NAMES)
    def test_phi_is_normalized(self, name):
        phi = get_entry(name).phi
        assert complex(phi.value(0.0)) == pytest.approx(1.0, abs=1e-15)
        assert complex(phi.d1(0.0)).real > 0

    @pytest.mark.parametrize("name", ALL_NAMES)
    def test_disk_fits_inside_image(self, name):
        entry = get_entry(name)
        z = (1 - 1e-3) * np.exp(2j * np.pi * np.arange(4096) / 4096)
        distance = np.abs(entry.phi.value(z) - 1.0)
        assert distance.min() >= entry.r1 - 1e-3


# ── Distance and growth ───────────────────────────────────────────────────────

class TestProfiles:
    @pytest.mark.parametrize("name", ALL_NAMES)
    def test_dist_max_matches_sampled_maximum(self, name):
        phi = get_entry(name).phi
        sampled = sup_on_circle(lambda z: np.abs(phi.value(z) - 1.0), 0.5)
        assert sampled.value == pytest.approx(dist_max(name, 0.5), abs=1e-9)

    @pytest.mark.parametrize("name", ALL_NAMES)
    def test_growth_matches_sampled_maximum(self, name):
        f0 = extremal_map(name)
        sampled = sup_on_circle(lambda z: np.abs(f0.value(z)), 0.4)
        assert sampled.value == pytest.approx(growth_M(name, 0.4), abs=1e-9)

    @pytest.mark.parametrize("name", ALL_NAMES)
    def test_product_is_nondecreasing(self, name):
        products = [row["product"] for row in growth_profile(name, samples=40)]
        assert all(b >= a for a, b in zip(products, products[1:]))

    def test_radius_domain(self):
        with pytest.raises(DomainError):
            dist_max("e", 1.0)
        with pytest.raises(DomainError):
            growth_M("e", 0.0)


# ── Extremal functions ────────────────────────────────────────────────────────

class TestExtremalFunctions:
    @pytest.mark.parametrize("name", CLOSED_FORM)
    def test_structural_formula_matches_closed_form(self, name):
        closed = extremal_map(name)
        z = np.array([0.3 + 0.2j, -0.5j, -0.6, 0.7])
        assert closed.provenance is Provenance.CLOSED_FORM
        assert np.allclose(structural_f0(get_entry(name).phi, z), closed.value(z), atol=1e-9)

    @pytest.mark.parametrize("name", CLOSED_FORM)
    def test_closed_form_derivative_is_f0_phi_over_z(self, name):
        f0 = extremal_map(name)
        z, h = 0.25 - 0.15j, 1e-6
        numeric = (f0.value(z + h) - f0.value(z - h)) / (2 * h)
        assert complex(f0.d1(z)) == pytest.approx(complex(numeric), abs=1e-8)

    def test_exponential_coefficients(self):
        a = taylor_coefficients(extremal_map("e"), 16)
        assert np.allclose(a[1:6], [1, 1, 3 / 4, 17 / 36, 19 / 72], atol=1e-8)

    def test_crescent_coefficients(self):
        a = taylor_coefficients(extremal_map("Cr"), 16)
        assert np.allclose(a[1:6], [1, 1, 3 / 4, 5 / 12, 1 / 6], atol=1e-8)

    def test_sine_extremal_is_not_the_sigmoid_series(self):
        a = taylor_coefficients(extremal_map("S"), 16)
        assert a[2] == pytest.approx(1.0, abs=1e-8)
        assert a[3] == pytest.approx(0.5, abs=1e-8)

    def test_second_derivative(self):
        f0 = extremal_map("C")
        z, h = 0.3 + 0.1j, 1e-5
        numeric = (f0.d1(z + h) - f0.d1(z - h)) / (2 * h)
        assert complex(f0.d2(z)) == pytest.approx(complex(numeric), abs=1e-7)

    def test_structural_rejects_boundary(self):
        with pytest.raises(DomainError):
            structural_f0(PHI_C, 1.0)

    def test_structural_rejects_unnormalized_phi(self):
        with pytest.raises(DomainError):
            structural_f0(polynomial_map([2, 1]), 0.5)


class TestPlotData:
    def test_boundary_trace_rows(self):
        rows = boundary_trace("C", 1.0, 64)
        assert len(rows) == 64
        assert rows[0]["theta"] == 0.0
        assert rows[0]["re"] == pytest.approx(1 + 4 / 3 + 2 / 3)
        assert rows[0]["im"] == pytest.approx(0.0, abs=1e-15)

    def test_boundary_radius_domain(self):
        with pytest.raises(DomainError):
            boundary_trace("C", 1.5)
