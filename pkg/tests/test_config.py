"""Tests for environment-driven settings."""

import tomllib
from pathlib import Path

import pytest
from pydantic import ValidationError

from gftlab.config import Settings, get_settings


def test_defaults():
    s = Settings(_env_file=None)
    assert s.default_tol is None
    assert s.root_tol == 1e-12
    assert s.guard == 0.999
    assert s.angles == 4096
    assert s.seed == 7


def test_get_settings_is_cached():
    assert get_settings() is get_settings()


def test_environment_override(monkeypatch):
    monkeypatch.setenv("GFT_DEFAULT_TOL", "1e-3")
    monkeypatch.setenv("GFT_ANGLES", "512")
    s = Settings(_env_file=None)
    assert s.default_tol == 1e-3
    assert s.angles == 512


@pytest.mark.parametrize(
    "field,value",
    [
        ("default_tol", 0.0),
        ("root_tol", -1e-12),
        ("scan_step", 0.02),
        ("guard", 1.0),
        ("angles", 32),
        ("suite_angles", 16),
    ],
)
def test_invalid_values_rejected(field, value):
    with pytest.raises(ValidationError):
        Settings(_env_file=None, **{field: value})


def test_pytest_collects_tests_and_doctests():
    # A positional path in addopts would replace testpaths
    pyproject = Path(__file__).resolve().parents[1] / "pyproject.toml"
    options = tomllib.loads(pyproject.read_text(encoding="utf-8"))["tool"]["pytest"]["ini_options"]
    assert options["testpaths"] == ["tests", "gftlab"]
    assert all(arg.startswith("-") for arg in options["addopts"].split())
