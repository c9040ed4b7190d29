"""
Shared test fixtures for the gravicav test suite.
"""

import copy
import json

import pytest

from gravicav.models import Tolerances
from gravicav.oracle import GwMode, JointSystem
from gravicav.params import PhysicalConstants

OPTICAL_OMEGA0 = 1.77e15


def _make_minimal_scenario(**overrides):
    """Create a minimal valid scenario document entry for testing."""
    base = {
        "name": "test_vacuum",
        "kind": "vacuum_squeezing",
        "params": {"alpha": 1.0},
        "time_grid": [0.0, 6.283185307179586, 101],
    }
    # Apply overrides via deep merge
    _deep_merge(base, copy.deepcopy(overrides))
    return base


def _deep_merge(base, override):
    """Deep merge override into base dict."""
    for key, value in override.items():
        if key in base and isinstance(base[key], dict) and isinstance(value, dict):
            _deep_merge(base[key], value)
        else:
            base[key] = value


@pytest.fixture(autouse=True)
def _no_budget_env(monkeypatch):
    """Tests never inherit a dimension budget from the environment."""
    monkeypatch.delenv("GRAVICAV_BUDGET", raising=False)


@pytest.fixture
def tol():
    return Tolerances()


@pytest.fixture
def constants():
    return PhysicalConstants.default()


@pytest.fixture
def small_system():
    """One gravitational mode, dims (6, 10), q = 0.1."""
    return JointSystem(6, (GwMode(1.0, 0.1, 10),), budget=4096)


@pytest.fixture
def oracle_system():
    """The acceptance-size vacuum oracle system, dims (24, 16), q = 0.1."""
    return JointSystem(24, (GwMode(1.0, 0.1, 16),), budget=4096)


@pytest.fixture
def two_mode_system():
    return JointSystem(4, (GwMode(1.0, 0.1, 4), GwMode(1.7, 0.08, 4)), budget=4096)


@pytest.fixture
def scenario_file(tmp_path):
    """Write scenario entries to a temp config and return the path."""
    def _write(*entries):
        path = tmp_path / "scenarios.json"
        path.write_text(json.dumps({"scenarios": list(entries)}, indent=2), encoding="utf-8")
        return str(path)
    return _write


def make_scenario(**overrides):
    """Public helper to create scenario dicts in tests."""
    return _make_minimal_scenario(**overrides)
