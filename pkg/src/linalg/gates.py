"""
Single-qubit gate matrices and unitary helpers.

Conventions:
  Rz(θ) = diag(e^{-iθ/2}, e^{iθ/2})
  P(φ)  = diag(1, e^{iφ})
  T     = P(π/4)
"""
from math import cos, sin, pi, sqrt

import numpy as np
from scipy.stats import unitary_group

from src.config import cfg


_SQRT2_INV = 1 / sqrt(2)

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
H = np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT2_INV
T = np.array([[1, 0], [0, np.exp(1j * pi / 4)]], dtype=complex)
TDG = T.conj().T


def rz(theta: float) -> np.ndarray:
    return np.array([[np.exp(-0.5j * theta), 0], [0, np.exp(0.5j * theta)]], dtype=complex)


def ry(theta: float) -> np.ndarray:
    return np.array([[cos(theta / 2), -sin(theta / 2)], [sin(theta / 2), cos(theta / 2)]], dtype=complex)


def rx(theta: float) -> np.ndarray:
    return np.array(
        [[cos(theta / 2), -1j * sin(theta / 2)], [-1j * sin(theta / 2), cos(theta / 2)]],
        dtype=complex,
    )


def phase(phi: float) -> np.ndarray:
    return np.array([[1, 0], [0, np.exp(1j * phi)]], dtype=complex)


def is_unitary(m: np.ndarray, tol: float | None = None) -> bool:
    """M†M = I within `tol` (max-entry)."""
    tol = cfg.simulator.unitary_tolerance if tol is None else tol
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    return bool(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))) <= tol)


def haar_unitary(dim: int, seed: int | np.random.Generator | None = None) -> np.ndarray:
    """Haar-random dim x dim unitary, reproducible for a given seed or generator."""
    return unitary_group.rvs(dim, random_state=seed)


def haar_state(num_qubits: int, seed: int | np.random.Generator | None = None) -> np.ndarray:
    """Random pure state: first column of a Haar unitary."""
    return haar_unitary(2 ** num_qubits, seed)[:, 0].astype(complex)


_FIXED = {"x": X, "h": H, "t": T, "tdg": TDG}
_PARAMETRIC = {"rz": rz, "ry": ry, "rx": rx, "p": phase}


def gate_matrix(kind: str, params: tuple[float, ...] = ()) -> np.ndarray:
    """2x2 matrix of a named single-qubit gate (GateKind values are accepted as names)."""
    if kind in _FIXED:
        return _FIXED[kind]
    if kind in _PARAMETRIC:
        if len(params) != 1:
            raise ValueError(f"{kind} takes one angle, got {len(params)}")
        return _PARAMETRIC[kind](params[0])
    raise ValueError(f"Unknown gate name: {kind!r}. Choose from {sorted({**_FIXED, **_PARAMETRIC})}")
