"""
Shared pytest configuration and fixtures.
"""

import importlib
import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(__file__)), "src"))

from nakayama_tau.algebra import NakayamaAlgebra  # noqa: E402


def pytest_configure(config) -> None:
    config.addinivalue_line("markers", "slow: exhaustive checks that take a while")


@pytest.fixture
def c2() -> NakayamaAlgebra:
    return NakayamaAlgebra.cyclic(2)


@pytest.fixture
def c3() -> NakayamaAlgebra:
    return NakayamaAlgebra.cyclic(3)


@pytest.fixture
def c6() -> NakayamaAlgebra:
    return NakayamaAlgebra.cyclic(6)


@pytest.fixture
def isolated_config(tmp_path, monkeypatch):
    """Point the run ledger at a temporary database."""
    monkeypatch.setenv("NAKAYAMA_DB_PATH", str(tmp_path / "runs.db"))
    lazy = importlib.import_module("nakayama_tau.config").config
    lazy._config = None
    yield lazy
    lazy._config = None
