"""
Pytest fixtures for the fan-out Controlled-U tests.
"""
import numpy as np
import pytest

from src.circuit_ir.circuit import Circuit, ccx, cx, rz, swap, u, x
from src.decompose.networks import expand
from src.linalg.gates import haar_unitary


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: 100k-shot statistical checks")


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)


@pytest.fixture
def haar_matrices() -> list[np.ndarray]:
    """Seeded Haar-random 2x2 unitaries."""
    return [haar_unitary(2, seed) for seed in range(50)]


@pytest.fixture
def two_shared_toffolis() -> Circuit:
    """CCX(0,1->2) then CCX(0,3->4), lowered to Clifford+T in program order."""
    return expand(Circuit(5, (ccx(0, 1, 2), ccx(0, 3, 4))))


@pytest.fixture
def layered_example() -> Circuit:
    """4-qubit circuit that packs into 3 layers."""
    return Circuit(4, (
        rz(0.3, 0), swap(1, 2), rz(0.7, 3),
        cx(0, 1), cx(3, 2),
        x(0), cx(2, 1), rz(1.1, 3),
    ))


@pytest.fixture
def four_qubit_u() -> Circuit:
    """4 single-qubit gates, then 2 disjoint CNOTs."""
    gates = [u(haar_unitary(2, 100 + q), q) for q in range(4)] + [cx(0, 1), cx(2, 3)]
    return Circuit(4, tuple(gates), "four_qubit_u")
