"""
Brute-force statevector and unitary simulator.

Basis ordering is little-endian: qubit 0 is the least significant bit of the
basis index. A state is a 1-D complex array of length 2^n; a unitary is built by
pushing the identity's columns through the same kernels as a batch.

Single-qubit gates contract one tensor axis; every multi-qubit kind in the IR
is a (controlled) permutation of basis states and is applied with index
arithmetic on the whole register.
"""
import numpy as np

from src.circuit_ir.circuit import Circuit, Gate, GateKind, CircuitValidationError
from src.config import cfg
from src.linalg import gates as G


class SimulationError(ValueError):
    """Raised for inputs the simulator cannot handle."""


def single_qubit_matrix(gate: Gate) -> np.ndarray:
    """2x2 matrix of a single-qubit gate."""
    if gate.kind == GateKind.U:
        return gate.matrix_array()
    if not gate.is_single_qubit:
        raise SimulationError(f"{gate.kind.value} is not a single-qubit gate")
    return G.gate_matrix(gate.kind.value, gate.params)


def num_qubits_of(state: np.ndarray) -> int:
    n = int(np.log2(state.shape[0]))
    if 2 ** n != state.shape[0]:
        raise SimulationError(f"State length {state.shape[0]} is not a power of two")
    return n


def zero_state(num_qubits: int) -> np.ndarray:
    return basis_state(num_qubits, 0)


def basis_state(num_qubits: int, index: int) -> np.ndarray:
    state = np.zeros(2 ** num_qubits, dtype=complex)
    state[index] = 1.0
    return state


def _check_gate(gate: Gate, n: int) -> None:
    if len(set(gate.qubits)) != len(gate.qubits):
        raise CircuitValidationError([f"duplicate qubit in {gate}"])
    bad = [q for q in gate.qubits if q < 0 or q >= n]
    if bad:
        raise CircuitValidationError([f"qubit out of range in {gate}: {bad} for {n} qubits"])


def _bit(idx: np.ndarray, q: int) -> np.ndarray:
    return (idx >> q) & 1


def _destination(gate: Gate, n: int) -> np.ndarray:
    """Basis index each input index is mapped to by a permutation gate."""
    idx = np.arange(2 ** n)
    kind = gate.kind

    if kind == GateKind.SWAP:
        a, b = gate.qubits
        flip = _bit(idx, a) != _bit(idx, b)
        return np.where(flip, idx ^ ((1 << a) | (1 << b)), idx)

    if kind == GateKind.CSWAP:
        c, a, b = gate.qubits
        flip = (_bit(idx, c) == 1) & (_bit(idx, a) != _bit(idx, b))
        return np.where(flip, idx ^ ((1 << a) | (1 << b)), idx)

    # X-type: CNOT, CCX, FANOUT, MCX_FANOUT
    polarities = gate.polarities or (1,) * len(gate.controls)
    active = np.ones(idx.shape, dtype=bool)
    for c, pol in zip(gate.controls, polarities):
        active &= _bit(idx, c) == pol
    mask = 0
    for t in gate.targets:
        mask |= 1 << t
    return np.where(active, idx ^ mask, idx)


def _apply(columns: np.ndarray, gate: Gate, n: int) -> np.ndarray:
    """Apply `gate` to every column of a (2^n, m) array."""
    kind = gate.kind
    if kind == GateKind.MEASURE:
        return columns
    if gate.is_single_qubit:
        m = columns.shape[1]
        axis = n - 1 - gate.qubits[0]
        tensor = columns.reshape([2] * n + [m])
        tensor = np.tensordot(single_qubit_matrix(gate), tensor, axes=([1], [axis]))
        return np.moveaxis(tensor, 0, axis).reshape(2 ** n, m)
    if kind in (GateKind.CNOT, GateKind.CCX, GateKind.FANOUT, GateKind.MCX_FANOUT,
                GateKind.SWAP, GateKind.CSWAP):
        out = np.empty_like(columns)
        out[_destination(gate, n)] = columns
        return out
    raise SimulationError(f"Unknown gate kind: {kind}")


def apply_gate(state: np.ndarray, gate: Gate) -> np.ndarray:
    """
    Apply one gate to a statevector.

    MEASURE is a marker only; readout statistics are taken from the final state
    with probability_zero() or sample().
    """
    n = num_qubits_of(state)
    _check_gate(gate, n)
    out = _apply(np.asarray(state, dtype=complex).reshape(-1, 1), gate, n)[:, 0]
    norm = float(np.vdot(out, out).real)
    if abs(norm - 1.0) > cfg.simulator.norm_tolerance:
        raise SimulationError(f"State norm {norm:.12f} drifted after {gate}")
    return out


def run_circuit(circuit: Circuit, state: np.ndarray | None = None) -> np.ndarray:
    """Apply every gate of `circuit` in order, starting from |0...0> by default."""
    if state is None:
        state = zero_state(circuit.num_qubits)
    if state.shape[0] != 2 ** circuit.num_qubits:
        raise SimulationError(
            f"State has {num_qubits_of(state)} qubits, circuit has {circuit.num_qubits}"
        )
    for gate in circuit.gates:
        state = apply_gate(state, gate)
    return state


def circuit_unitary(circuit: Circuit) -> np.ndarray:
    """Dense 2^n x 2^n unitary of a measurement-free circuit."""
    n = circuit.num_qubits
    guard = cfg.simulator.max_unitary_qubits
    if n > guard:
        raise SimulationError(f"circuit_unitary is limited to {guard} qubits, got {n}")
    if circuit.has_measurement():
        raise SimulationError("circuit_unitary does not support measurement gates")
    columns = np.eye(2 ** n, dtype=complex)
    for gate in circuit.gates:
        _check_gate(gate, n)
        columns = _apply(columns, gate, n)
    return columns


# ── Comparisons and readout ────────────────────────────────────────────────

def phase_aligned_deviation(m1: np.ndarray, m2: np.ndarray) -> float:
    """
    Max-entry |m1 - e^{iφ} m2| with φ read off the largest-magnitude entry of m2.
    """
    m1 = np.asarray(m1, dtype=complex)
    m2 = np.asarray(m2, dtype=complex)
    if m1.shape != m2.shape:
        raise SimulationError(f"Dimension mismatch: {m1.shape} vs {m2.shape}")
    if m1.size == 0:
        return 0.0
    k = int(np.argmax(np.abs(m2)))
    ref, other = m2.flat[k], m1.flat[k]
    if abs(ref) == 0.0:
        return float(np.max(np.abs(m1)))
    ratio = other / ref
    rot = ratio / abs(ratio) if abs(ratio) > 0 else 1.0
    return float(np.max(np.abs(m1 - rot * m2)))


def equiv_global_phase(m1: np.ndarray, m2: np.ndarray, tol: float | None = None) -> bool:
    """True iff m1 equals m2 up to a global phase, within `tol`."""
    tol = cfg.simulator.equivalence_tolerance if tol is None else tol
    return phase_aligned_deviation(m1, m2) <= tol


def fidelity(ideal: np.ndarray, noisy: np.ndarray) -> float:
    """|<ideal|noisy>|^2, clipped to [0, 1]."""
    if ideal.shape != noisy.shape:
        raise SimulationError(f"Dimension mismatch: {ideal.shape} vs {noisy.shape}")
    value = abs(np.vdot(ideal, noisy)) ** 2
    return float(min(1.0, max(0.0, value)))


def probability_zero(state: np.ndarray, qubit: int) -> float:
    """Probability that measuring `qubit` yields 0."""
    n = num_qubits_of(state)
    if not 0 <= qubit < n:
        raise SimulationError(f"Invalid qubit {qubit} for {n}-qubit state")
    idx = np.arange(state.shape[0])
    probs = np.abs(state) ** 2
    return float(probs[_bit(idx, qubit) == 0].sum() / probs.sum())


def sample(state: np.ndarray, qubit: int, shots: int, seed: int | None = None) -> dict[int, int]:
    """Measure `qubit` `shots` times. Returns {0: count, 1: count}."""
    if shots < 1:
        raise SimulationError(f"shots must be >= 1, got {shots}")
    p0 = probability_zero(state, qubit)
    rng = np.random.default_rng(seed)
    zeros = int(rng.binomial(shots, min(1.0, max(0.0, p0))))
    return {0: zeros, 1: shots - zeros}
