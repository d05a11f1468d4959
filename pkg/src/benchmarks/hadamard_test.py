"""
Hadamard test and the k+1 qubit interference circuit.

The ancilla is the most significant qubit (index = width of U), so the
controlled body acts as [I 0; 0 U] on the full register.

    hadamard test     H, C-U, H, measure          P(0) = (1 + Re<ψ|U|ψ>) / 2
    interference      H, C-U_A, X, C-U_B, X, H    P(0) = (1 + Re<B|A>) / 2
"""
import numpy as np

from src.circuit_ir.circuit import Circuit, CircuitValidationError, h, measure, x
from src.decompose.networks import expand
from src.linalg.simulator import probability_zero, run_circuit
from src.schedule.moments import ScheduledCircuit, asap_schedule, flatten
from src.synthesis.controlled_u import (
    ControlledUSpec, reference_controlled_u, serialized_controlled_u, synth_controlled_u,
)


def _layer(n: int, *gates) -> ScheduledCircuit:
    return ScheduledCircuit.from_layers(n, [list(gates)])


def build_hadamard_test(u: Circuit, prep: Circuit | None = None, serialized: bool = False) -> ScheduledCircuit:
    """
    Scheduled Hadamard test. `prep` (uncontrolled) prepares |ψ> on the data
    register first; the default is |0...0>.
    """
    anc = u.num_qubits
    n = anc + 1
    spec = ControlledUSpec(anc, u)
    body = serialized_controlled_u(spec) if serialized else synth_controlled_u(spec)
    s = ScheduledCircuit(n, (), f"hadamard_test_{u.label}")
    if prep is not None:
        s = s + asap_schedule(prep.with_width(n))
    return s + _layer(n, h(anc)) + body.with_width(n) + _layer(n, h(anc)) + _layer(n, measure(anc))


def gen_hadamard_test(u: Circuit, prep: Circuit | None = None) -> Circuit:
    return flatten(build_hadamard_test(u, prep))


def hadamard_test_program(u: Circuit) -> Circuit:
    """Program-order reference form (each gate of U controlled separately)."""
    anc = u.num_qubits
    body = reference_controlled_u(ControlledUSpec(anc, u))
    return Circuit(anc + 1, (h(anc), *body.gates, h(anc), measure(anc)), f"hadamard_program_{u.label}")


def hadamard_test_asap(u: Circuit) -> ScheduledCircuit:
    return asap_schedule(expand(hadamard_test_program(u)))


def build_interference(u_a: Circuit, u_b: Circuit, serialized: bool = False) -> ScheduledCircuit:
    if u_a.num_qubits != u_b.num_qubits:
        raise CircuitValidationError([
            f"interference circuit needs equal widths, got {u_a.num_qubits} and {u_b.num_qubits}"
        ])
    anc = u_a.num_qubits
    n = anc + 1

    def controlled(u: Circuit) -> ScheduledCircuit:
        spec = ControlledUSpec(anc, u)
        return (serialized_controlled_u(spec) if serialized else synth_controlled_u(spec)).with_width(n)

    return (
        ScheduledCircuit(n, (), "interference")
        + _layer(n, h(anc))
        + controlled(u_a)
        + _layer(n, x(anc))
        + controlled(u_b)
        + _layer(n, x(anc))
        + _layer(n, h(anc))
        + _layer(n, measure(anc))
    )


def gen_interference(u_a: Circuit, u_b: Circuit) -> Circuit:
    return flatten(build_interference(u_a, u_b))


def interference_program(u_a: Circuit, u_b: Circuit) -> Circuit:
    anc = u_a.num_qubits
    ref_a = reference_controlled_u(ControlledUSpec(anc, u_a))
    ref_b = reference_controlled_u(ControlledUSpec(anc, u_b))
    gates = (h(anc), *ref_a.gates, x(anc), *ref_b.gates, x(anc), h(anc), measure(anc))
    return Circuit(anc + 1, gates, "interference_program")


def interference_asap(u_a: Circuit, u_b: Circuit) -> ScheduledCircuit:
    return asap_schedule(expand(interference_program(u_a, u_b)))


def ancilla_zero_probability(circuit: Circuit, state: np.ndarray | None = None) -> float:
    """P(0) on the ancilla (the top qubit) after running `circuit`."""
    final = run_circuit(circuit, state)
    return probability_zero(final, circuit.num_qubits - 1)
