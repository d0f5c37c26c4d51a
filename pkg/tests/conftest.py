"""
Shared pytest fixtures for the gftlab test suite.

Grids are kept coarse (256 angles) wherever a test does not depend on the
production 4096-node resolution, so the suite stays fast.
"""

import io
import json
from pathlib import Path
from typing import Callable, List, Tuple

import pytest

from gftlab.main import main
from gftlab.schemas.reports import DiskGrid
from gftlab.services.analytic_core import identity_map, koebe_map


@pytest.fixture
def coarse_grid() -> DiskGrid:
    return DiskGrid(angular=256)


@pytest.fixture
def identity():
    return identity_map()


@pytest.fixture
def koebe():
    return koebe_map()


@pytest.fixture
def write_json(tmp_path: Path) -> Callable[[str, dict], str]:
    """Write a UTF-8 JSON document under tmp_path and return its path."""

    def _write(name: str, payload: dict) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)

    return _write


@pytest.fixture
def run_cli() -> Callable[[List[str]], Tuple[int, str]]:
    """Invoke the CLI in-process and capture its table output."""

    def _run(argv: List[str]) -> Tuple[int, str]:
        stream = io.StringIO()
        code = main(argv, stream=stream)
        return code, stream.getvalue()

    return _run
