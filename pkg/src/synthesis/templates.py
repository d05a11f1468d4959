"""
Shared-control templates.

Many controlled gates that share one control qubit are compiled into a fixed
number of moments, independent of how many target pairs there are:

  synth_shared_1q       5 moments for r controlled single-qubit gates
  synth_shared_toffoli  12 moments for r Toffolis with a common first control
"""
from math import pi

import numpy as np

from src.circuit_ir.circuit import CircuitValidationError, cx, fanout, h, p, t, tdg, u
from src.decompose.euler import abc
from src.schedule.moments import ScheduledCircuit


def _width(qubits: list[int], num_qubits: int | None) -> int:
    return num_qubits if num_qubits is not None else max(qubits) + 1


def synth_shared_1q(
    control: int,
    pairs: list[tuple[int, np.ndarray]],
    num_qubits: int | None = None,
) -> ScheduledCircuit:
    """
    Apply controlled-U_i on every (target_i, U_i) pair in 5 moments:
    {C_i}, FANOUT, {B_i}, FANOUT, {A_i} with P(Σ α_i) on the control.

    Args:
        control: Shared control qubit.
        pairs: (target, 2x2 unitary) per controlled gate; targets distinct.
        num_qubits: Register width, defaults to the highest qubit used + 1.
    """
    targets = [target for target, _ in pairs]
    if not pairs:
        raise CircuitValidationError(["synth_shared_1q needs at least one target"])
    if len(set(targets)) != len(targets) or control in targets:
        raise CircuitValidationError([f"duplicate targets for control {control}: {targets}"])

    parts = [(target, abc(matrix)) for target, matrix in pairs]
    total_alpha = sum(d.alpha for _, d in parts)
    layers = [
        [u(d.C, q) for q, d in parts],
        [fanout(control, targets)],
        [u(d.B, q) for q, d in parts],
        [fanout(control, targets)],
        [u(d.A, q) for q, d in parts] + [p(total_alpha, control)],
    ]
    return ScheduledCircuit.from_layers(_width([control, *targets], num_qubits), layers, "shared_1q")


def synth_shared_toffoli(
    shared: int,
    pairs: list[tuple[int, int]],
    num_qubits: int | None = None,
) -> ScheduledCircuit:
    """Apply CCX(shared, c_i -> t_i) for every (c_i, t_i) pair in 12 moments."""
    if not pairs:
        raise CircuitValidationError(["synth_shared_toffoli needs at least one pair"])
    qubits = [shared] + [q for pair in pairs for q in pair]
    if len(set(qubits)) != len(qubits):
        raise CircuitValidationError([f"qubit collision in shared Toffoli block: {qubits}"])

    cs = [c for c, _ in pairs]
    ts = [tg for _, tg in pairs]
    r = len(pairs)
    layers = [
        [h(tg) for tg in ts],
        [cx(c, tg) for c, tg in pairs],
        [tdg(tg) for tg in ts],
        [fanout(shared, ts)],
        [t(tg) for tg in ts],
        [cx(c, tg) for c, tg in pairs],
        [tdg(tg) for tg in ts],
        [fanout(shared, ts)],
        [t(c) for c in cs] + [t(tg) for tg in ts],
        [fanout(shared, cs)],
        [p(r * pi / 4, shared)] + [tdg(c) for c in cs] + [h(tg) for tg in ts],
        [fanout(shared, cs)],
    ]
    return ScheduledCircuit.from_layers(_width(qubits, num_qubits), layers, "shared_toffoli")
