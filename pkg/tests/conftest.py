from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from platgate import cable_matrices, one_qubit_matrices, theory_params

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def params26():
    return theory_params(26, 2)


@pytest.fixture(scope="session")
def ops26(params26):
    return one_qubit_matrices(params26)


@pytest.fixture(scope="session")
def cables26(params26):
    return cable_matrices(params26)


@pytest.fixture(scope="session")
def data_dir():
    return DATA_DIR
