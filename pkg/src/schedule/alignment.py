"""
Fan-out alignment pass.

Walks the circuit in ASAP order and moves each CNOT/FANOUT leftward across
gates it commutes with, merging it into an earlier gate with the same control
and disjoint targets. Diagonal single-qubit gates on the same qubit are fused
the same way, so the phases a shared control picks up from several blocks
collapse into one gate.
"""
from math import remainder, tau

from src.circuit_ir.circuit import Circuit, Gate, fanout, p
from src.schedule.commutation import ALIGNABLE_KINDS, commutes, diagonal_angle, is_diagonal_1q
from src.schedule.moments import asap_schedule, depth
from src.utils.logger import logger

_ZERO_PHASE = 1e-12


def _merge_target(gates: list[Gate], i: int) -> int | None:
    """Earliest index a CNOT/FANOUT at `i` can be merged into, if any."""
    g = gates[i]
    control = g.controls[0]
    best = None
    for j in range(i - 1, -1, -1):
        f = gates[j]
        if not commutes(g, f):
            break
        if f.kind in ALIGNABLE_KINDS and f.controls[0] == control and not set(f.targets) & set(g.targets):
            best = j
    return best


def _fuse_target(gates: list[Gate], i: int) -> int | None:
    """Earliest index holding a diagonal gate on the same qubit reachable by commutation."""
    g = gates[i]
    best = None
    for j in range(i - 1, -1, -1):
        f = gates[j]
        if not commutes(g, f):
            break
        if is_diagonal_1q(f) and f.qubits == g.qubits:
            best = j
    return best


def _rewrite_once(gates: list[Gate]) -> bool:
    for i, g in enumerate(gates):
        if g.kind in ALIGNABLE_KINDS:
            j = _merge_target(gates, i)
            if j is not None:
                f = gates[j]
                gates[j] = fanout(f.controls[0], f.targets + g.targets)
                del gates[i]
                return True
        elif is_diagonal_1q(g):
            j = _fuse_target(gates, i)
            if j is not None:
                angle = remainder(diagonal_angle(gates[j]) + diagonal_angle(g), tau)
                del gates[i]
                if abs(angle) < _ZERO_PHASE:
                    del gates[j]
                else:
                    gates[j] = p(angle, g.qubits[0])
                return True
    return False


def fanout_align(circuit: Circuit) -> Circuit:
    """
    Align same-control CNOTs into FANOUT gates until a fixed point.

    Deterministic: gates are visited in ASAP order (ties by program order) and
    each merge goes to the earliest eligible partner. Returns the input
    unchanged unless the aligned circuit is shallower under asap_schedule.
    """
    n = circuit.num_qubits
    before = depth(asap_schedule(circuit))
    gates = list(circuit.gates)
    merges = 0
    while True:
        gates = asap_schedule(Circuit(n, tuple(gates))).gates()
        if not _rewrite_once(gates):
            break
        merges += 1

    aligned = Circuit(n, tuple(gates), circuit.label)
    after = depth(asap_schedule(aligned))
    if after >= before:
        logger.debug(f"fanout_align: depth {before} -> {after} after {merges} rewrites, keeping the input")
        return circuit
    logger.debug(f"fanout_align: {merges} rewrites, depth {before} -> {after}")
    return aligned
