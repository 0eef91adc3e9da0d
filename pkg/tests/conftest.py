import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / 'src'))
sys.path.insert(0, str(Path(__file__).resolve().parent))

from cartan import AlgebraKind
from connection import ConnectionParams


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: end-to-end pipelines that integrate many ODEs")


@pytest.fixture
def A1():
    return AlgebraKind('A', 1)


@pytest.fixture
def A2():
    return AlgebraKind('A', 2)


@pytest.fixture
def A3():
    return AlgebraKind('A', 3)


@pytest.fixture
def D4():
    return AlgebraKind('D', 4)


@pytest.fixture
def generic_ell_A2():
    """Small real l; exponents on V^(1) are 0.1, 0.15, -0.25"""
    return (0.1 + 0j, 0.25 + 0j)


@pytest.fixture
def params_A2(A2):
    return ConnectionParams(kind=A2, M=1.0, E=0.0, tol=1e-10)


@pytest.fixture
def store_url(tmp_path):
    return f"sqlite:///{tmp_path / 'results.db'}"


@pytest.fixture
def rng():
    return np.random.default_rng(7)
