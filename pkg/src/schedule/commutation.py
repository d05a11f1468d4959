"""
Commutation rules used by the alignment pass.

Sound but not complete: only disjointness, shared controls with different
targets, and diagonal gates passing through controls are recognized.
"""
from math import pi

from src.circuit_ir.circuit import Gate, GateKind, CONTROLLED_KINDS, DIAGONAL_KINDS

ALIGNABLE_KINDS = frozenset({GateKind.CNOT, GateKind.FANOUT})


def is_diagonal_1q(gate: Gate) -> bool:
    return gate.kind in DIAGONAL_KINDS


def diagonal_angle(gate: Gate) -> float:
    """Phase φ such that the gate equals P(φ) up to a global phase."""
    if gate.kind == GateKind.T:
        return pi / 4
    if gate.kind == GateKind.TDG:
        return -pi / 4
    if gate.kind in (GateKind.P, GateKind.RZ):
        return gate.params[0]
    raise ValueError(f"{gate.kind.value} is not a diagonal single-qubit gate")


def _only_as_control(q: int, gate: Gate) -> bool:
    return gate.kind in CONTROLLED_KINDS and q in gate.controls


def commutes(g1: Gate, g2: Gate) -> bool:
    shared = set(g1.qubits) & set(g2.qubits)
    if not shared:
        return True
    if g1.kind == GateKind.MEASURE or g2.kind == GateKind.MEASURE:
        return False

    if g1.kind in CONTROLLED_KINDS and g2.kind in CONTROLLED_KINDS:
        return shared <= set(g1.controls) and shared <= set(g2.controls)

    if is_diagonal_1q(g1) and is_diagonal_1q(g2):
        return True
    if is_diagonal_1q(g1):
        return _only_as_control(g1.qubits[0], g2)
    if is_diagonal_1q(g2):
        return _only_as_control(g2.qubits[0], g1)
    return False
