"""
Controlled-U synthesis.

The body U is layered by ASAP scheduling. Each layer is compiled with one
shared-control template: single-qubit layers take 5 moments, CNOT layers take
12, and a layer holding both takes 17 (single-qubit block first). No ancilla
qubits are used.

The reference construction controls every gate of U separately and is used
both as the equivalence oracle and as the serialized depth baseline.
"""
from dataclasses import dataclass

from src.circuit_ir.circuit import Circuit, Gate, GateKind, ccx
from src.decompose.euler import controlled_1q_gates
from src.decompose.networks import expand
from src.linalg.simulator import single_qubit_matrix
from src.schedule.moments import ScheduledCircuit, asap_schedule, block_sequential_schedule
from src.synthesis.templates import synth_shared_1q, synth_shared_toffoli
from src.utils.logger import logger

MIXED_LAYER_DEPTH = 17


class SynthesisError(ValueError):
    """Raised for Controlled-U bodies outside the {single-qubit, CNOT} basis."""


@dataclass(frozen=True)
class ControlledUSpec:
    control: int
    u_circuit: Circuit

    def __post_init__(self) -> None:
        if self.control in self.u_circuit.used_qubits():
            raise SynthesisError(f"control {self.control} is used inside U")
        bad = sorted({g.kind.value for g in self.u_circuit.gates
                      if not (g.is_single_qubit or g.kind == GateKind.CNOT)})
        if bad:
            raise SynthesisError(f"unsupported gate kinds in U: {bad}. Choose from single-qubit gates and cx")

    @property
    def width(self) -> int:
        return max(self.u_circuit.num_qubits, self.control + 1)


def synth_controlled_u(spec: ControlledUSpec) -> ScheduledCircuit:
    n = spec.width
    result = ScheduledCircuit(n, (), spec.u_circuit.label)
    layers = asap_schedule(spec.u_circuit).moments
    for layer in layers:
        ones = [g for g in layer.gates if g.is_single_qubit]
        cnots = [g for g in layer.gates if g.kind == GateKind.CNOT]
        if ones:
            pairs = [(g.qubits[0], single_qubit_matrix(g)) for g in ones]
            result = result + synth_shared_1q(spec.control, pairs, n)
        if cnots:
            pairs = [(g.controls[0], g.targets[0]) for g in cnots]
            result = result + synth_shared_toffoli(spec.control, pairs, n)
    logger.debug(f"synth_controlled_u: {len(layers)} layers -> {len(result)} moments on {n} qubits")
    return result


def controlled_gate(control: int, gate: Gate) -> list[Gate]:
    if gate.is_single_qubit:
        return controlled_1q_gates(control, gate.qubits[0], single_qubit_matrix(gate))
    if gate.kind == GateKind.CNOT:
        return [ccx(control, *gate.qubits)]
    raise SynthesisError(f"cannot control {gate.kind.value}")


def reference_blocks(spec: ControlledUSpec) -> list[Circuit]:
    """One circuit per controlled gate of U, in program order."""
    return [
        Circuit(spec.width, tuple(controlled_gate(spec.control, g)), f"c-{g.kind.value}")
        for g in spec.u_circuit.gates
    ]


def reference_controlled_u(spec: ControlledUSpec) -> Circuit:
    gates = tuple(g for block in reference_blocks(spec) for g in block.gates)
    return Circuit(spec.width, gates, spec.u_circuit.label)


def serialized_controlled_u(spec: ControlledUSpec) -> ScheduledCircuit:
    """Serialized baseline: each controlled gate lowered and scheduled on its own."""
    return block_sequential_schedule([expand(b) for b in reference_blocks(spec)]).with_width(spec.width)


def coarse_grained_depth(k: int) -> int:
    """Closed-form coarse-grained line for k shared-control Toffolis."""
    return 12 * k
