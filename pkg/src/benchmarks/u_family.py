"""
Parameterized U bodies for the Hadamard-test applications.

  qft                 controlled-phase ladder plus bit-reversal swaps
  brickwork           Haar single-qubit layer, then even and odd CNOT bricks
  hardware_efficient  RY/RZ layer with uniform angles, then a CNOT chain
  swap_network        alternating nearest-neighbour SWAP layers

All bodies are over {single-qubit, CNOT} and deterministic for a given seed.
"""
from math import pi

import numpy as np

from src.circuit_ir.circuit import Circuit, Gate, cx, h, p, ry, rz, u
from src.decompose.networks import swap_gates
from src.linalg.gates import haar_unitary

U_FAMILIES = ("qft", "brickwork", "hardware_efficient", "swap_network")


def controlled_phase_gates(phi: float, control: int, target: int) -> list[Gate]:
    return [
        cx(control, target),
        p(-phi / 2, target),
        cx(control, target),
        p(phi / 2, target),
        p(phi / 2, control),
    ]


def _qft(width: int) -> list[Gate]:
    gates: list[Gate] = []
    for i in range(width - 1, -1, -1):
        gates.append(h(i))
        for j in range(i - 1, -1, -1):
            gates += controlled_phase_gates(pi / 2 ** (i - j), j, i)
    for i in range(width // 2):
        gates += swap_gates(i, width - 1 - i)
    return gates


def _brickwork(width: int, depth: int, rng: np.random.Generator) -> list[Gate]:
    gates: list[Gate] = []
    for _ in range(depth):
        gates += [u(haar_unitary(2, rng), q) for q in range(width)]
        for start in (0, 1):
            gates += [cx(q, q + 1) for q in range(start, width - 1, 2)]
    return gates


def _hardware_efficient(width: int, depth: int, rng: np.random.Generator) -> list[Gate]:
    gates: list[Gate] = []
    for _ in range(depth):
        for q in range(width):
            gates.append(ry(rng.uniform(0, 2 * pi), q))
            gates.append(rz(rng.uniform(0, 2 * pi), q))
        gates += [cx(q, q + 1) for q in range(width - 1)]
    return gates


def _swap_network(width: int, depth: int) -> list[Gate]:
    gates: list[Gate] = []
    for layer in range(depth):
        for q in range(layer % 2, width - 1, 2):
            gates += swap_gates(q, q + 1)
    return gates


def gen_u_family(kind: str, width: int, depth: int = 1, seed: int = 0) -> Circuit:
    """
    Build a U body of the given family.

    Args:
        kind: One of U_FAMILIES.
        width: Number of data qubits.
        depth: Layer count (ignored by qft).
        seed: Seed for the random families.
    """
    if kind not in U_FAMILIES:
        raise ValueError(f"Unknown U family: {kind!r}. Choose from {list(U_FAMILIES)}")
    if width < 1:
        raise ValueError(f"width must be >= 1, got {width}")

    rng = np.random.default_rng(seed)
    if kind == "qft":
        gates = _qft(width)
    elif kind == "brickwork":
        gates = _brickwork(width, depth, rng)
    elif kind == "hardware_efficient":
        gates = _hardware_efficient(width, depth, rng)
    else:
        gates = _swap_network(width, depth)
    return Circuit(width, tuple(gates), f"{kind}_w{width}")
