"""Shared fixtures"""
import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from curves.weierstrass import Curve  # noqa: E402

# Small enough to keep the certificate tests fast
TEST_PRECISION = 12


@pytest.fixture
def family_curve():
    """E_0 : y^2 = x^3 - 2"""
    return Curve(0, -2)


@pytest.fixture
def precision():
    return TEST_PRECISION


@pytest.fixture
def dataset_path(tmp_path):
    lines = [
        {"n": 0, "x": "3", "y": "5"},
        {"n": 1, "x": "-1", "y": "2", "verdict": "Good"},
    ]
    path = tmp_path / "generators.jsonl"
    path.write_text("\n".join(json.dumps(line) for line in lines) + "\n")
    return path
