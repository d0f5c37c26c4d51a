"""Validation tests for the pydantic value types and documents."""

import math

import pytest
from pydantic import ValidationError

from gftlab.schemas.analytic import PerturbationDocument, PowerSeries, PowerSeriesDocument
from gftlab.schemas.cli import CliConfig, Command, OutputFormat
from gftlab.schemas.reports import ClassParams, DiskGrid, MembershipReport, RootResult


class TestPowerSeries:
    def test_short_input_is_padded(self):
        s = PowerSeries(coeffs=(1,), order_n=3)
        assert s.coeffs == (1, 0, 0, 0)
        assert s.truncation_N == s.order_n + 1

    def test_leading_coefficient(self):
        with pytest.raises(ValidationError, match="a_1"):
            PowerSeries(coeffs=(2, 0.1))

    def test_vanishing_coefficients(self):
        with pytest.raises(ValidationError, match="a_2"):
            PowerSeries(coeffs=(1, 0.1), order_n=2)

    def test_coefficient_array_has_constant_term(self):
        a = PowerSeries(coeffs=(1, 0.5j)).coefficient_array()
        assert list(a) == [0, 1, 0.5j]

    def test_frozen(self):
        s = PowerSeries(coeffs=(1,))
        with pytest.raises(ValidationError):
            s.order_n = 2


class TestDocuments:
    def test_document_to_series(self):
        doc = PowerSeriesDocument(n=2, coeffs=[(1.0, 0.0), (0.0, 0.0), (0.1, -0.2)])
        assert doc.to_series().coeffs[2] == 0.1 - 0.2j

    def test_document_from_series(self):
        doc = PowerSeriesDocument.from_series(PowerSeries(coeffs=(1, 0.25)))
        assert doc.coeffs == [(1.0, 0.0), (0.25, 0.0)]

    def test_document_leading_coefficient(self):
        with pytest.raises(ValidationError):
            PowerSeriesDocument(coeffs=[(1.0, 0.5)])

    def test_perturbation_needs_a_coefficient(self):
        with pytest.raises(ValidationError):
            PerturbationDocument(coeffs=[])
        assert list(PerturbationDocument(coeffs=[(0.1, 0.2)]).complex_coeffs()) == [0.1 + 0.2j]


class TestGridAndParams:
    def test_default_grid(self):
        grid = DiskGrid()
        assert grid.radii[-1] < grid.guard < 1

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"radii": (0.2, 0.1)},
            {"radii": (0.5, 1.0)},
            {"angular": 63},
            {"guard": 1.0},
            {"radii": (0.5, 0.8), "guard": 0.7},
        ],
    )
    def test_invalid_grid(self, kwargs):
        with pytest.raises(ValidationError):
            DiskGrid(**kwargs)

    def test_params_accept_lambda_alias(self):
        assert ClassParams(**{"lambda": 0.2, "alpha": 0.5}).lam == 0.2
        assert ClassParams(lam=0.2, alpha=0.5, n=3).n == 3

    def test_params_positive_lambda(self):
        with pytest.raises(ValidationError):
            ClassParams(lam=0.0, alpha=0.5)


class TestReports:
    def test_satisfied_must_match_comparison(self):
        with pytest.raises(ValidationError):
            MembershipReport(satisfied=True, sup_value=0.6, threshold=0.5)

    def test_failed_report(self):
        report = MembershipReport.failed(0.5, "pole", -0.5 + 0j)
        assert not report.satisfied
        assert math.isinf(report.sup_value)
        assert report.argmax == pytest.approx((0.5, math.pi))
        assert report.caveat == "grid-certified only"

    def test_root_outside_bracket(self):
        with pytest.raises(ValidationError):
            RootResult(root=0.6, residual=0.0, iterations=1, bracket_used=(0.1, 0.5))


class TestCliConfig:
    def test_defaults(self):
        config = CliConfig(command="radii")
        assert config.command is Command.RADII
        assert config.format is OutputFormat.CSV
        assert config.angles >= 64

    @pytest.mark.parametrize(
        "kwargs", [{"tol": 0.0}, {"guard": 0.0}, {"guard": 1.0}, {"angles": 10}, {"command": "serve"}]
    )
    def test_invalid(self, kwargs):
        with pytest.raises(ValidationError):
            CliConfig(**{"command": "radii", **kwargs})
