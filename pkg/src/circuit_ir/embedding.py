"""Embedding of a single gate into the full 2^n-dimensional space."""
import numpy as np

from src.circuit_ir.circuit import Circuit, Gate, GateKind, CircuitValidationError


def gate_unitary(gate: Gate, num_qubits: int) -> np.ndarray:
    """2^n x 2^n matrix of `gate` acting on an n-qubit register."""
    from src.linalg.simulator import circuit_unitary

    if gate.kind == GateKind.MEASURE:
        raise CircuitValidationError(["measure has no unitary"])
    return circuit_unitary(Circuit(num_qubits, (gate,)))
