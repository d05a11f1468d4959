"""
Circuit intermediate representation.

A Circuit is an immutable, ordered list of Gates over a fixed number of
qubits. Every pass (decomposition, scheduling, synthesis) takes a Circuit and
returns a new one.

Qubit order inside a gate is controls first, then targets:
  - CNOT      (control, target)
  - CCX       (control, control, target)
  - CSWAP     (control, a, b)
  - FANOUT    (control, target, target, ...)
  - MCX_FANOUT controls then targets; `polarities` has one 0/1 entry per control
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator

import numpy as np


class GateKind(str, Enum):
    X = "x"
    H = "h"
    T = "t"
    TDG = "tdg"
    RZ = "rz"
    P = "p"
    RY = "ry"
    U = "u"
    CNOT = "cx"
    SWAP = "swap"
    CCX = "ccx"
    CSWAP = "cswap"
    FANOUT = "fanout"
    MCX_FANOUT = "mcx_fanout"
    MEASURE = "measure"


SINGLE_QUBIT_KINDS = frozenset({
    GateKind.X, GateKind.H, GateKind.T, GateKind.TDG,
    GateKind.RZ, GateKind.P, GateKind.RY, GateKind.U,
})
DIAGONAL_KINDS = frozenset({GateKind.T, GateKind.TDG, GateKind.RZ, GateKind.P})
CONTROLLED_KINDS = frozenset({
    GateKind.CNOT, GateKind.CCX, GateKind.CSWAP, GateKind.FANOUT, GateKind.MCX_FANOUT,
})
PARAM_COUNT = {GateKind.RZ: 1, GateKind.P: 1, GateKind.RY: 1}
FIXED_ARITY = {
    **{kind: 1 for kind in SINGLE_QUBIT_KINDS},
    GateKind.MEASURE: 1,
    GateKind.CNOT: 2,
    GateKind.SWAP: 2,
    GateKind.CCX: 3,
    GateKind.CSWAP: 3,
}

Matrix2 = tuple[tuple[complex, complex], tuple[complex, complex]]


class CircuitValidationError(ValueError):
    """Raised when a circuit violates an IR invariant."""

    def __init__(self, diagnostics: list[str]) -> None:
        self.diagnostics = diagnostics
        super().__init__("; ".join(diagnostics))


@dataclass(frozen=True)
class Gate:
    kind: GateKind
    qubits: tuple[int, ...]
    params: tuple[float, ...] = ()
    polarities: tuple[int, ...] = ()
    matrix: Matrix2 | None = None

    @property
    def num_controls(self) -> int:
        if self.kind in (GateKind.CNOT, GateKind.CSWAP, GateKind.FANOUT):
            return 1
        if self.kind == GateKind.CCX:
            return 2
        if self.kind == GateKind.MCX_FANOUT:
            return len(self.polarities)
        return 0

    @property
    def controls(self) -> tuple[int, ...]:
        return self.qubits[:self.num_controls]

    @property
    def targets(self) -> tuple[int, ...]:
        return self.qubits[self.num_controls:]

    @property
    def is_single_qubit(self) -> bool:
        return self.kind in SINGLE_QUBIT_KINDS

    @property
    def is_diagonal(self) -> bool:
        return self.kind in DIAGONAL_KINDS

    def matrix_array(self) -> np.ndarray:
        """The 2x2 matrix of a U gate as a numpy array."""
        if self.matrix is None:
            raise ValueError(f"Gate {self.kind.value} carries no matrix")
        return np.array(self.matrix, dtype=complex)

    def __str__(self) -> str:
        args = ",".join(str(q) for q in self.qubits)
        if self.params:
            return f"{self.kind.value}({', '.join(f'{p:.4f}' for p in self.params)}) {args}"
        return f"{self.kind.value} {args}"


@dataclass(frozen=True)
class Circuit:
    num_qubits: int
    gates: tuple[Gate, ...] = field(default_factory=tuple)
    label: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "gates", tuple(self.gates))

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self) -> Iterator[Gate]:
        return iter(self.gates)

    def __add__(self, other: Circuit) -> Circuit:
        return self.compose(other)

    def compose(self, other: Circuit) -> Circuit:
        """Append `other` after this circuit, widening to the larger register."""
        return Circuit(
            max(self.num_qubits, other.num_qubits),
            self.gates + other.gates,
            self.label or other.label,
        )

    def append(self, gate: Gate) -> Circuit:
        return self.extend((gate,))

    def extend(self, gates: Iterable[Gate]) -> Circuit:
        return Circuit(self.num_qubits, self.gates + tuple(gates), self.label)

    def with_width(self, num_qubits: int) -> Circuit:
        return Circuit(num_qubits, self.gates, self.label)

    def used_qubits(self) -> set[int]:
        return {q for g in self.gates for q in g.qubits}

    def count(self, kind: GateKind) -> int:
        return sum(1 for g in self.gates if g.kind == kind)

    def has_measurement(self) -> bool:
        return any(g.kind == GateKind.MEASURE for g in self.gates)


# ── Gate factories ──────────────────────────────────────────────────────────

def x(q: int) -> Gate:
    return Gate(GateKind.X, (q,))


def h(q: int) -> Gate:
    return Gate(GateKind.H, (q,))


def t(q: int) -> Gate:
    return Gate(GateKind.T, (q,))


def tdg(q: int) -> Gate:
    return Gate(GateKind.TDG, (q,))


def rz(theta: float, q: int) -> Gate:
    return Gate(GateKind.RZ, (q,), (float(theta),))


def p(phi: float, q: int) -> Gate:
    return Gate(GateKind.P, (q,), (float(phi),))


def ry(theta: float, q: int) -> Gate:
    return Gate(GateKind.RY, (q,), (float(theta),))


def u(matrix: np.ndarray, q: int) -> Gate:
    m = np.asarray(matrix, dtype=complex)
    if m.shape != (2, 2):
        raise ValueError(f"U gate needs a 2x2 matrix, got shape {m.shape}")
    rows = tuple(tuple(complex(v) for v in row) for row in m)
    return Gate(GateKind.U, (q,), matrix=rows)


def cx(control: int, target: int) -> Gate:
    return Gate(GateKind.CNOT, (control, target))


def swap(a: int, b: int) -> Gate:
    return Gate(GateKind.SWAP, (a, b))


def ccx(c0: int, c1: int, target: int) -> Gate:
    return Gate(GateKind.CCX, (c0, c1, target))


def cswap(control: int, a: int, b: int) -> Gate:
    return Gate(GateKind.CSWAP, (control, a, b))


def fanout(control: int, targets: Iterable[int]) -> Gate:
    return Gate(GateKind.FANOUT, (control, *targets))


def mcx_fanout(controls: Iterable[int], polarities: Iterable[int], targets: Iterable[int]) -> Gate:
    return Gate(
        GateKind.MCX_FANOUT,
        (*controls, *targets),
        polarities=tuple(int(b) for b in polarities),
    )


def measure(q: int) -> Gate:
    return Gate(GateKind.MEASURE, (q,))


# ── Validation ─────────────────────────────────────────────────────────────

def arity_problem(gate: Gate) -> str | None:
    """Describe a qubit/parameter count mismatch, or None when the shape is right."""
    kind = gate.kind
    n = len(gate.qubits)
    if kind in FIXED_ARITY and n != FIXED_ARITY[kind]:
        return f"{kind.value} expects {FIXED_ARITY[kind]} qubits, got {n}"
    if kind == GateKind.FANOUT and n < 2:
        return f"fanout expects a control and at least one target, got {n} qubits"
    if kind == GateKind.MCX_FANOUT:
        if not gate.polarities:
            return "mcx_fanout expects at least one polarized control"
        if any(b not in (0, 1) for b in gate.polarities):
            return "mcx_fanout polarities must be 0 or 1"
        if n <= len(gate.polarities):
            return "mcx_fanout expects at least one target"
    expected = PARAM_COUNT.get(kind, 0)
    if len(gate.params) != expected:
        return f"{kind.value} expects {expected} params, got {len(gate.params)}"
    if kind == GateKind.U and gate.matrix is None:
        return "u gate is missing its matrix"
    return None


def validate(circuit: Circuit) -> list[str]:
    """
    Collect every invariant violation in the circuit.

    Returns:
        Diagnostics tagged with the offending gate index; empty when the circuit is valid.
    """
    from src.linalg.gates import is_unitary

    diagnostics: list[str] = []
    if circuit.num_qubits < 1:
        diagnostics.append(f"num_qubits must be positive, got {circuit.num_qubits}")

    for i, gate in enumerate(circuit.gates):
        problem = arity_problem(gate)
        if problem:
            diagnostics.append(f"arity mismatch in gate {i}: {problem}")
        if len(set(gate.qubits)) != len(gate.qubits):
            diagnostics.append(f"duplicate qubit in gate {i}")
        bad = [q for q in gate.qubits if q < 0 or q >= circuit.num_qubits]
        if bad:
            diagnostics.append(f"qubit out of range in gate {i}: {bad} for {circuit.num_qubits} qubits")
        if gate.kind == GateKind.U and gate.matrix is not None and not is_unitary(gate.matrix_array()):
            diagnostics.append(f"non-unitary matrix in gate {i}")
    return diagnostics


def require_valid(circuit: Circuit) -> Circuit:
    """Raise CircuitValidationError when validate() reports anything."""
    diagnostics = validate(circuit)
    if diagnostics:
        raise CircuitValidationError(diagnostics)
    return circuit
