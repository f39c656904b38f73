"""
Pytest configuration and shared fixtures for lochmf tests.

This module provides common fixtures and configuration for all test modules.
"""

import json
import sys
from pathlib import Path

import pytest

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

# Import after path is set
from config.models import EvalParams, FiniteDifferenceSettings
from core.arithmetic import as_discriminant


@pytest.fixture
def quick_params():
    """Small truncation for fast unit tests."""
    return EvalParams(a_max=200, n_max=20, tol=1e-6, quad_points=32)


@pytest.fixture
def default_params():
    """The truncation of the default profile."""
    return EvalParams()


@pytest.fixture
def fd_settings():
    return FiniteDifferenceSettings()


@pytest.fixture
def disc5():
    return as_discriminant(5)


@pytest.fixture
def disc8():
    return as_discriminant(8)


@pytest.fixture
def disc20():
    """Non-fundamental: 20 = 5 * 2^2."""
    return as_discriminant(20)


@pytest.fixture
def profile_dir(tmp_path):
    """A profiles/ directory with one small profile named 'tiny'."""
    base = tmp_path / "profiles"
    tiny = base / "tiny"
    tiny.mkdir(parents=True)
    (tiny / "eval.json").write_text(json.dumps({"a_max": 150, "n_max": 15, "tol": 1e-6, "quad_points": 32}))
    (tiny / "verify.json").write_text(json.dumps({
        "checks": [
            {"name": "cocycle", "rel_tol": 1e-10, "params": {"samples": 50}},
            {"name": "rationality", "params": {"k": 2, "D": 5}},
            {"name": "zagier", "enabled": False, "params": {"D": 5, "a_max": 1000}},
        ]
    }))
    return base
