"""
Gate networks for the high-level kinds: Toffoli (Clifford+T), SWAP as three
CNOTs, and controlled-SWAP around a single Toffoli.

expand() lowers a circuit onto {single-qubit, CNOT, FANOUT, MCX_FANOUT}.
"""
from src.circuit_ir.circuit import (
    Circuit, Gate, GateKind, CircuitValidationError, ccx, cx, h, t, tdg,
)


def toffoli_gates(a: int, b: int, target: int) -> list[Gate]:
    """
    15-gate Toffoli: 6 CNOTs, an H pair and 7 T/T† gates.

    The T on `a` sits between the last target CNOT and the CNOT(a, b) pair it
    commutes with, so ASAP scheduling puts the network in 12 moments with the
    T(b), T(target) pair sharing a moment.
    """
    return [
        h(target),
        cx(b, target),
        tdg(target),
        cx(a, target),
        t(target),
        cx(b, target),
        tdg(target),
        cx(a, target),
        t(b),
        t(target),
        t(a),
        h(target),
        cx(a, b),
        tdg(b),
        cx(a, b),
    ]


def toffoli_network(a: int = 0, b: int = 1, target: int = 2, num_qubits: int | None = None) -> Circuit:
    n = num_qubits if num_qubits is not None else max(a, b, target) + 1
    return Circuit(n, tuple(toffoli_gates(a, b, target)), "toffoli")


def swap_gates(a: int, b: int) -> list[Gate]:
    return [cx(a, b), cx(b, a), cx(a, b)]


def cswap_gates(control: int, a: int, b: int, controlled_outer: bool = False) -> list[Gate]:
    """
    Controlled-SWAP as a triple XOR. With uncontrolled outer CNOTs the two
    outer gates cancel when the control is |0>, so only the middle needs it.
    """
    if len({control, a, b}) != 3:
        raise CircuitValidationError([f"cswap_network needs distinct qubits, got {(control, a, b)}"])
    if controlled_outer:
        return [ccx(control, b, a), ccx(control, a, b), ccx(control, b, a)]
    return [cx(b, a), ccx(control, a, b), cx(b, a)]


def cswap_network(
    control: int, a: int, b: int, controlled_outer: bool = False, num_qubits: int | None = None,
) -> Circuit:
    n = num_qubits if num_qubits is not None else max(control, a, b) + 1
    return Circuit(n, tuple(cswap_gates(control, a, b, controlled_outer)), "cswap")


def expand_gate(gate: Gate) -> list[Gate]:
    kind = gate.kind
    if kind == GateKind.SWAP:
        return swap_gates(*gate.qubits)
    if kind == GateKind.CCX:
        return toffoli_gates(*gate.qubits)
    if kind == GateKind.CSWAP:
        return [g for inner in cswap_gates(*gate.qubits) for g in expand_gate(inner)]
    return [gate]


def expand(circuit: Circuit) -> Circuit:
    """Lower SWAP, CCX and CSWAP; every other gate is kept as is."""
    return Circuit(
        circuit.num_qubits,
        tuple(g for gate in circuit.gates for g in expand_gate(gate)),
        circuit.label,
    )
