"""
Moment-based schedules.

A Moment is a set of gates with pairwise-disjoint qubits; a ScheduledCircuit is
an ordered list of moments and its depth is the number of (counted) moments.
A FANOUT occupies its control and all targets as one gate.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from src.circuit_ir.circuit import Circuit, Gate, GateKind, CircuitValidationError, cx
from src.utils.logger import logger


@dataclass(frozen=True)
class Moment:
    gates: tuple[Gate, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "gates", tuple(self.gates))

    @property
    def qubits(self) -> set[int]:
        return {q for g in self.gates for q in g.qubits}

    def __len__(self) -> int:
        return len(self.gates)


@dataclass(frozen=True)
class ScheduledCircuit:
    num_qubits: int
    moments: tuple[Moment, ...] = field(default_factory=tuple)
    label: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "moments",
            tuple(m if isinstance(m, Moment) else Moment(tuple(m)) for m in self.moments),
        )

    def __len__(self) -> int:
        return len(self.moments)

    def __add__(self, other: ScheduledCircuit) -> ScheduledCircuit:
        return ScheduledCircuit(
            max(self.num_qubits, other.num_qubits),
            self.moments + other.moments,
            self.label or other.label,
        )

    @classmethod
    def from_layers(cls, num_qubits: int, layers: Iterable[Iterable[Gate]], label: str = "") -> ScheduledCircuit:
        """Build a schedule from explicit gate layers, dropping empty ones."""
        moments = tuple(Moment(tuple(layer)) for layer in layers)
        return cls(num_qubits, tuple(m for m in moments if m.gates), label)

    def with_width(self, num_qubits: int) -> ScheduledCircuit:
        return ScheduledCircuit(num_qubits, self.moments, self.label)

    def gates(self) -> list[Gate]:
        return [g for m in self.moments for g in m.gates]


def flatten(s: ScheduledCircuit) -> Circuit:
    """Concatenate moments in order into a Circuit."""
    return Circuit(s.num_qubits, tuple(s.gates()), s.label)


def check_moments(s: ScheduledCircuit) -> ScheduledCircuit:
    """Raise CircuitValidationError if any moment reuses a qubit."""
    problems = []
    for i, moment in enumerate(s.moments):
        seen: set[int] = set()
        for gate in moment.gates:
            clash = seen.intersection(gate.qubits)
            if clash:
                problems.append(f"moment {i} reuses qubits {sorted(clash)}")
            seen.update(gate.qubits)
    if problems:
        raise CircuitValidationError(problems)
    return s


# ── Schedulers ─────────────────────────────────────────────────────────────

def asap_schedule(c: Circuit) -> ScheduledCircuit:
    """
    Place each gate in the earliest moment after every earlier gate that shares
    a qubit with it. Program-order dependencies only; no commutation.
    """
    ready = [0] * c.num_qubits
    layers: list[list[Gate]] = []
    for gate in c.gates:
        slot = max((ready[q] for q in gate.qubits), default=0)
        if slot == len(layers):
            layers.append([])
        layers[slot].append(gate)
        for q in gate.qubits:
            ready[q] = slot + 1
    return ScheduledCircuit(c.num_qubits, tuple(Moment(tuple(layer)) for layer in layers), c.label)


def block_sequential_schedule(blocks: list[Circuit]) -> ScheduledCircuit:
    """Concatenate the ASAP schedule of each block; no overlap between blocks."""
    if not blocks:
        return ScheduledCircuit(0)
    width = max(b.num_qubits for b in blocks)
    if any(b.num_qubits != width for b in blocks):
        logger.debug(f"block_sequential_schedule widening blocks to {width} qubits")
    result = ScheduledCircuit(width)
    for block in blocks:
        result = result + asap_schedule(block.with_width(width))
    return result


def serialize_fanouts(s: ScheduledCircuit) -> ScheduledCircuit:
    """
    Serial baseline for a fan-out schedule: a FANOUT (or MCX_FANOUT) with k
    targets becomes k consecutive single-target moments. Other gates of the
    moment stay in its first sub-moment.
    """
    moments: list[Moment] = []
    for moment in s.moments:
        split = max(
            (len(g.targets) for g in moment.gates
             if g.kind in (GateKind.FANOUT, GateKind.MCX_FANOUT)),
            default=1,
        )
        layers: list[list[Gate]] = [[] for _ in range(split)]
        for gate in moment.gates:
            if gate.kind == GateKind.FANOUT:
                for j, target in enumerate(gate.targets):
                    layers[j].append(cx(gate.controls[0], target))
            elif gate.kind == GateKind.MCX_FANOUT:
                for j, target in enumerate(gate.targets):
                    layers[j].append(Gate(
                        GateKind.MCX_FANOUT, (*gate.controls, target), polarities=gate.polarities,
                    ))
            else:
                layers[0].append(gate)
        moments.extend(Moment(tuple(layer)) for layer in layers)
    return ScheduledCircuit(s.num_qubits, tuple(moments), s.label)


# ── Depth ──────────────────────────────────────────────────────────────────

def readout_qubits(s: ScheduledCircuit) -> set[int]:
    return {g.qubits[0] for m in s.moments for g in m.gates if g.kind == GateKind.MEASURE}


def depth(s: ScheduledCircuit, exclude: Iterable[GateKind] = ()) -> int:
    """
    Number of moments holding at least one counted gate.

    MEASURE never counts. A gate whose kind is in `exclude` is discounted only
    when it acts solely on readout qubits, i.e. qubits measured somewhere in
    the schedule (the ancilla Hadamards of a SWAP or Hadamard test).
    """
    excluded = frozenset(exclude)
    readout = readout_qubits(s) if excluded else set()

    def counted(gate: Gate) -> bool:
        if gate.kind == GateKind.MEASURE:
            return False
        if gate.kind in excluded and set(gate.qubits) <= readout:
            return False
        return True

    return sum(1 for m in s.moments if any(counted(g) for g in m.gates))
