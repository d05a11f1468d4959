"""
Unit tests for schedulers, depth, commutation and the alignment pass.
"""
from itertools import product

import numpy as np
import pytest

from src.benchmarks.hadamard_test import hadamard_test_program, interference_program
from src.benchmarks.memory import MemoryLayout, explicit_memory_program
from src.benchmarks.swap_test import build_swap_test, swap_test_program
from src.benchmarks.u_family import gen_u_family
from src.circuit_ir.circuit import (
    Circuit, CircuitValidationError, GateKind, ccx, cx, fanout, h, mcx_fanout, measure, p, rz, t, tdg, x,
)
from src.circuit_ir.embedding import gate_unitary
from src.decompose.networks import cswap_network, expand
from src.linalg.simulator import circuit_unitary, equiv_global_phase
from src.schedule.alignment import fanout_align
from src.schedule.commutation import commutes
from src.schedule.moments import (
    Moment, ScheduledCircuit, asap_schedule, block_sequential_schedule, check_moments,
    depth, flatten, serialize_fanouts,
)


class TestDepth:
    def test_empty(self):
        assert depth(ScheduledCircuit(3)) == 0

    def test_layered_example(self, layered_example):
        assert depth(asap_schedule(layered_example)) == 3

    def test_swap_test_excluding_hadamards(self):
        s = build_swap_test(4)
        assert depth(s, {GateKind.H}) == 14
        assert depth(s) == 16

    def test_exclusion_only_applies_to_readout_qubits(self):
        s = ScheduledCircuit.from_layers(2, [[h(0)], [h(1)], [cx(0, 1)], [measure(0)]])
        assert depth(s, {GateKind.H}) == 2


class TestAsap:
    def test_disjoint_gates_share_a_moment(self):
        assert depth(asap_schedule(Circuit(4, tuple(h(q) for q in range(4))))) == 1

    def test_single_toffoli(self):
        assert depth(asap_schedule(expand(Circuit(3, (ccx(0, 1, 2),))))) == 12

    def test_two_shared_toffolis(self, two_shared_toffolis):
        assert depth(asap_schedule(two_shared_toffolis)) == 21

    def test_preserves_gates_and_moments(self, two_shared_toffolis):
        s = check_moments(asap_schedule(two_shared_toffolis))
        assert sorted(map(str, flatten(s).gates)) == sorted(map(str, two_shared_toffolis.gates))
        assert np.allclose(circuit_unitary(flatten(s)), circuit_unitary(two_shared_toffolis))

    def test_check_moments_rejects_overlap(self):
        bad = ScheduledCircuit(2, (Moment((h(0), cx(0, 1))),))
        with pytest.raises(CircuitValidationError):
            check_moments(bad)


class TestBlockSequential:
    def test_two_fredkins(self):
        blocks = [expand(cswap_network(0, a, a + 2, num_qubits=5)) for a in (1, 2)]
        assert depth(block_sequential_schedule(blocks)) == 28

    def test_four_fredkins(self):
        blocks = [expand(cswap_network(0, a, a + 4, num_qubits=9)) for a in (1, 2, 3, 4)]
        assert depth(block_sequential_schedule(blocks)) == 56

    def test_single_block_is_asap(self, two_shared_toffolis):
        assert block_sequential_schedule([two_shared_toffolis]) == asap_schedule(two_shared_toffolis)

    def test_empty(self):
        assert len(block_sequential_schedule([])) == 0


class TestSerializeFanouts:
    def test_splits_targets(self):
        s = ScheduledCircuit.from_layers(4, [[fanout(0, [1, 2, 3])]])
        out = serialize_fanouts(s)
        assert len(out) == 3
        assert [m.gates for m in out.moments] == [(cx(0, 1),), (cx(0, 2),), (cx(0, 3),)]
        assert np.allclose(circuit_unitary(flatten(out)), circuit_unitary(flatten(s)))

    def test_mcx_fanout(self):
        s = ScheduledCircuit.from_layers(4, [[mcx_fanout([0, 1], [1, 0], [2, 3])]])
        out = serialize_fanouts(s)
        assert len(out) == 2
        assert np.allclose(circuit_unitary(flatten(out)), circuit_unitary(flatten(s)))


class TestCommutes:
    def test_shared_control_different_targets(self):
        assert commutes(cx(0, 1), cx(0, 2))

    def test_diagonal_through_control(self):
        assert commutes(rz(0.3, 0), cx(0, 2))

    def test_diagonal_on_target(self):
        assert not commutes(rz(0.3, 1), cx(0, 1))

    def test_disjoint(self):
        assert commutes(h(0), h(1))

    def test_rules_are_sound(self):
        gates = [
            cx(0, 1), cx(0, 2), cx(1, 0), cx(2, 1), fanout(0, [1, 2]), fanout(0, [3]),
            ccx(0, 1, 2), ccx(0, 3, 2), ccx(0, 3, 1), rz(0.4, 0), p(0.9, 1), t(2), tdg(0), h(0), x(1),
        ]
        for g1, g2 in product(gates, repeat=2):
            if commutes(g1, g2):
                a, b = gate_unitary(g1, 4), gate_unitary(g2, 4)
                assert np.max(np.abs(a @ b - b @ a)) <= 1e-10, (str(g1), str(g2))


class TestFanoutAlign:
    def test_cnot_chain_becomes_fanout(self):
        c = Circuit(4, (cx(0, 1), cx(0, 2), cx(0, 3)))
        assert fanout_align(c).gates == (fanout(0, [1, 2, 3]),)

    def test_commutes_through_control_phase(self):
        c = Circuit(3, (cx(0, 1), rz(0.5, 0), cx(0, 2)))
        out = fanout_align(c)
        assert out.gates == (fanout(0, [1, 2]), rz(0.5, 0))

    def test_merges_across_an_interaction(self):
        c = Circuit(3, (cx(0, 1), cx(0, 2), cx(1, 2)))
        out = fanout_align(c)
        assert out.gates == (fanout(0, [1, 2]), cx(1, 2))
        assert depth(asap_schedule(out)) == 2

    def test_two_shared_toffolis_reach_template_depth(self, two_shared_toffolis):
        assert depth(asap_schedule(two_shared_toffolis)) == 21
        aligned = fanout_align(two_shared_toffolis)
        assert depth(asap_schedule(aligned)) <= 12
        assert aligned.count(GateKind.FANOUT) > 0
        assert equiv_global_phase(circuit_unitary(aligned), circuit_unitary(two_shared_toffolis))

    def test_never_deepens(self):
        c = Circuit(3, (cx(0, 1), h(1), cx(1, 2), cx(0, 2)))
        assert depth(asap_schedule(fanout_align(c))) <= depth(asap_schedule(c))

    def test_cancelling_phases_are_removed(self):
        c = Circuit(2, (t(0), cx(0, 1), tdg(0)))
        assert fanout_align(c).gates == (cx(0, 1),)


def lowered_benchmarks() -> list[Circuit]:
    """Expanded benchmark programs without MEASURE, all within 10 qubits."""
    u_a = gen_u_family("brickwork", 3, 2, seed=1)
    u_b = gen_u_family("brickwork", 3, 2, seed=2)
    programs = [
        swap_test_program(2),
        hadamard_test_program(u_a),
        interference_program(u_a, u_b),
        explicit_memory_program(MemoryLayout(2)),
    ]
    return [
        expand(Circuit(c.num_qubits, tuple(g for g in c.gates if g.kind != GateKind.MEASURE), c.label))
        for c in programs
    ]


@pytest.mark.parametrize("circuit", lowered_benchmarks(), ids=lambda c: c.label)
class TestFanoutAlignOnBenchmarks:
    def test_never_deepens(self, circuit):
        assert depth(asap_schedule(fanout_align(circuit))) <= depth(asap_schedule(circuit))

    def test_preserves_unitary(self, circuit):
        aligned = fanout_align(circuit)
        assert equiv_global_phase(circuit_unitary(aligned), circuit_unitary(circuit))
