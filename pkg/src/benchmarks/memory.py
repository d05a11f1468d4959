"""
Quantum memory generators.

Explicit memory (cells held in qubits, W = 1):
    index bits b_j = j (b_{n-1} is the MSB), cells m_j = n + j, load qubit n + 2^n.
    For k = n-1 .. 0, controlled on b_k, swap every cell m_j with m_{j+2^k}
    (j < 2^k). The addressed cell ends up in m_0, is swapped with the load
    qubit, and the controlled swaps are replayed in reverse. The load qubit
    then holds m_i, cell i holds the load qubit's previous value, and every
    other cell is restored.

    Each level is one column of controlled swaps: the outer CNOTs of every
    swap share a moment and the Toffolis form one shared-control block, so a
    level is 14 moments and the whole circuit is 28n + 3.

Implicit memory (cells held in the classical description):
    index bits b_j = j, data bits n .. n+W-1. For each address i, one
    MCX_FANOUT with polarities = bits of i flips the data bits set in data[i].
    Addresses holding 0 need no gate.
"""
from dataclasses import dataclass

from src.circuit_ir.circuit import Circuit, Gate, cswap, cx, mcx_fanout, swap
from src.decompose.networks import expand
from src.schedule.moments import (
    ScheduledCircuit, asap_schedule, block_sequential_schedule, flatten, serialize_fanouts,
)
from src.synthesis.templates import synth_shared_toffoli

LEVEL_DEPTH = 14
LOAD_SWAP_DEPTH = 3


@dataclass(frozen=True)
class MemoryLayout:
    n: int
    width: int = 1
    explicit: bool = True

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"memory needs n >= 1 index qubits, got {self.n}")
        if self.width < 1:
            raise ValueError(f"memory bitwidth must be >= 1, got {self.width}")
        if self.explicit and self.width != 1:
            raise ValueError(f"explicit memory supports W = 1 only, got W = {self.width}")

    @property
    def index_qubits(self) -> list[int]:
        return list(range(self.n))

    @property
    def cell_qubits(self) -> list[int]:
        return list(range(self.n, self.n + 2 ** self.n)) if self.explicit else []

    @property
    def load_qubits(self) -> list[int]:
        start = self.n + len(self.cell_qubits)
        return list(range(start, start + self.width))

    @property
    def num_qubits(self) -> int:
        return self.n + len(self.cell_qubits) + self.width


# ── Explicit memory ────────────────────────────────────────────────────────

def explicit_levels(layout: MemoryLayout) -> list[tuple[int, list[tuple[int, int]]]]:
    """(control index bit, [(lower cell, upper cell)]) per level, MSB first."""
    cells = layout.cell_qubits
    return [
        (k, [(cells[j], cells[j + 2 ** k]) for j in range(2 ** k)])
        for k in range(layout.n - 1, -1, -1)
    ]


def _level_schedule(layout: MemoryLayout, k: int, pairs: list[tuple[int, int]]) -> ScheduledCircuit:
    n = layout.num_qubits
    outer = ScheduledCircuit.from_layers(n, [[cx(hi, lo) for lo, hi in pairs]])
    return outer + synth_shared_toffoli(k, pairs, n) + outer


def _load_swap(layout: MemoryLayout) -> list[Gate]:
    m0, load = layout.cell_qubits[0], layout.load_qubits[0]
    return [cx(m0, load), cx(load, m0), cx(m0, load)]


def build_explicit_memory(layout: MemoryLayout) -> ScheduledCircuit:
    n = layout.num_qubits
    levels = explicit_levels(layout)
    s = ScheduledCircuit(n, (), f"explicit_memory_n{layout.n}")
    for k, pairs in levels:
        s = s + _level_schedule(layout, k, pairs)
    s = s + ScheduledCircuit.from_layers(n, [[g] for g in _load_swap(layout)])
    for k, pairs in reversed(levels):
        s = s + _level_schedule(layout, k, pairs)
    return s


def gen_explicit_memory(layout: MemoryLayout) -> Circuit:
    return flatten(build_explicit_memory(layout))


def explicit_memory_depth(n: int) -> int:
    """Closed-form depth of build_explicit_memory."""
    return 2 * LEVEL_DEPTH * n + LOAD_SWAP_DEPTH


def explicit_memory_program(layout: MemoryLayout) -> Circuit:
    """High-level program order: CSWAP columns, load SWAP, mirrored columns."""
    levels = explicit_levels(layout)
    down = [cswap(k, lo, hi) for k, pairs in levels for lo, hi in pairs]
    up = [cswap(k, lo, hi) for k, pairs in reversed(levels) for lo, hi in pairs]
    load = swap(layout.cell_qubits[0], layout.load_qubits[0])
    return Circuit(layout.num_qubits, (*down, load, *up), f"explicit_program_n{layout.n}")


def explicit_memory_serialized(layout: MemoryLayout) -> ScheduledCircuit:
    """Every controlled swap lowered and scheduled on its own."""
    program = explicit_memory_program(layout)
    blocks = [expand(Circuit(program.num_qubits, (g,))) for g in program.gates]
    return block_sequential_schedule(blocks)


def explicit_memory_asap(layout: MemoryLayout) -> ScheduledCircuit:
    return asap_schedule(expand(explicit_memory_program(layout)))


# ── Implicit memory ────────────────────────────────────────────────────────

def primes(count: int) -> list[int]:
    found: list[int] = []
    candidate = 2
    while len(found) < count:
        if all(candidate % q for q in found if q * q <= candidate):
            found.append(candidate)
        candidate += 1
    return found


def implicit_layout(data: list[int], width: int) -> MemoryLayout:
    size = len(data)
    n = size.bit_length() - 1
    if size < 2 or 2 ** n != size:
        raise ValueError(f"implicit memory needs 2^n >= 2 cells, got {size}")
    for i, value in enumerate(data):
        if value < 0 or value >= 2 ** width:
            raise ValueError(f"value overflow: data[{i}] = {value} does not fit in W = {width} bits")
    return MemoryLayout(n, width, explicit=False)


def build_implicit_memory(data: list[int], width: int) -> ScheduledCircuit:
    layout = implicit_layout(data, width)
    data_qubits = layout.load_qubits
    layers = []
    for address, value in enumerate(data):
        targets = [data_qubits[j] for j in range(width) if (value >> j) & 1]
        if not targets:
            continue
        polarities = [(address >> j) & 1 for j in range(layout.n)]
        layers.append([mcx_fanout(layout.index_qubits, polarities, targets)])
    return ScheduledCircuit.from_layers(layout.num_qubits, layers, f"implicit_memory_n{layout.n}_w{width}")


def gen_implicit_memory(data: list[int], width: int) -> Circuit:
    return flatten(build_implicit_memory(data, width))


def implicit_memory_serialized(data: list[int], width: int) -> ScheduledCircuit:
    """One multi-controlled X per set data bit: Σ popcount(data[i]) moments."""
    return serialize_fanouts(build_implicit_memory(data, width))


def implicit_memory_asap(data: list[int], width: int) -> ScheduledCircuit:
    return asap_schedule(flatten(implicit_memory_serialized(data, width)))


def read_register(index: int, qubits: list[int]) -> int:
    """Integer held by `qubits` (first qubit = LSB) in basis state `index`."""
    return sum(((index >> q) & 1) << j for j, q in enumerate(qubits))
