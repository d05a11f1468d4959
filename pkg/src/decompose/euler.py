"""
ZYZ Euler angles and the ABC construction for controlled single-qubit gates.

    U = e^{iα} Rz(β) Ry(γ) Rz(δ)
    A = Rz(β) Ry(γ/2),  B = Ry(-γ/2) Rz(-(δ+β)/2),  C = Rz((δ-β)/2)

so that A·B·C = I and e^{iα} A·X·B·X·C = U. A controlled-U is then
C, CNOT, B, CNOT, A on the target with P(α) on the control.
"""
from dataclasses import dataclass

import numpy as np
from scipy import linalg

from src.circuit_ir.circuit import Gate, cx, p, u
from src.linalg.gates import is_unitary, rz, ry

_DEGENERATE = 1e-12


class DecompositionError(ValueError):
    """Raised when a matrix cannot be decomposed."""


@dataclass(frozen=True)
class AbcDecomposition:
    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    alpha: float


def zyz(matrix: np.ndarray) -> tuple[float, float, float, float]:
    """
    Euler angles (alpha, beta, gamma, delta) with gamma in [0, π].

    At gamma = 0 only beta + delta is fixed and delta is set to 0; at
    gamma = π only beta - delta is fixed and beta is set to 0.
    """
    m = np.asarray(matrix, dtype=complex)
    if m.shape != (2, 2) or not is_unitary(m):
        raise DecompositionError("zyz needs a 2x2 unitary matrix")

    alpha = 0.5 * float(np.angle(linalg.det(m)))
    v = np.exp(-1j * alpha) * m  # special unitary
    cos_half, sin_half = abs(v[0, 0]), abs(v[1, 0])
    gamma = 2.0 * float(np.arctan2(sin_half, cos_half))

    if sin_half < _DEGENERATE:
        beta, delta = 2.0 * float(np.angle(v[1, 1])), 0.0
    elif cos_half < _DEGENERATE:
        beta, delta = 0.0, -2.0 * float(np.angle(v[1, 0]))
    else:
        plus = 2.0 * float(np.angle(v[1, 1]))  # beta + delta
        minus = 2.0 * float(np.angle(v[1, 0]))  # beta - delta
        beta, delta = 0.5 * (plus + minus), 0.5 * (plus - minus)
    return alpha, beta, gamma, delta


def zyz_matrix(alpha: float, beta: float, gamma: float, delta: float) -> np.ndarray:
    return np.exp(1j * alpha) * rz(beta) @ ry(gamma) @ rz(delta)


def abc(matrix: np.ndarray) -> AbcDecomposition:
    alpha, beta, gamma, delta = zyz(matrix)
    return AbcDecomposition(
        A=rz(beta) @ ry(gamma / 2),
        B=ry(-gamma / 2) @ rz(-(delta + beta) / 2),
        C=rz((delta - beta) / 2),
        alpha=alpha,
    )


def controlled_1q_gates(control: int, target: int, matrix: np.ndarray) -> list[Gate]:
    """Six-gate controlled-U: C, CNOT, B, CNOT, A on the target and P(α) on the control."""
    d = abc(matrix)
    return [
        u(d.C, target),
        cx(control, target),
        u(d.B, target),
        cx(control, target),
        u(d.A, target),
        p(d.alpha, control),
    ]
