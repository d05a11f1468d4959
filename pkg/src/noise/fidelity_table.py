"""
Gate fidelity table and the fidelity-product estimate of a schedule.

Gate classes: "1q", "cnot", and "fanout_N" for N = 2..8 targets. A fan-out
with a single target is a CNOT. The product of the class fidelities over all
gates approximates the circuit fidelity.
"""
from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from src.circuit_ir.circuit import Gate, GateKind
from src.config import cfg
from src.noise.model import NoiseModelError, scenario as make_scenario
from src.noise.monte_carlo import run_monte_carlo
from src.schedule.moments import ScheduledCircuit


@dataclass(frozen=True)
class FidelityTable:
    scenario: str
    entries: dict[str, float] = field(default_factory=dict)

    def __getitem__(self, gate_class: str) -> float:
        if gate_class not in self.entries:
            raise NoiseModelError(
                f"Unknown gate class: {gate_class!r}. Choose from {sorted(self.entries)}"
            )
        return self.entries[gate_class]


def gate_class(gate: Gate) -> str | None:
    """Fidelity-table class of a gate; None for MEASURE."""
    if gate.kind == GateKind.MEASURE:
        return None
    if gate.is_single_qubit:
        return "1q"
    if gate.kind == GateKind.CNOT:
        return "cnot"
    if gate.kind == GateKind.FANOUT:
        k = len(gate.targets)
        return "cnot" if k == 1 else f"fanout_{k}"
    return gate.kind.value


def build_fidelity_table(results: pd.DataFrame, scenario_label: str | None = None) -> FidelityTable:
    """
    Turn Monte Carlo rows into a gate table.

    CNOT is the serial N = 1 fidelity; fanout_N is the simultaneous fidelity at N,
    made non-increasing in N by a running minimum.
    """
    label = scenario_label
    if label is None and len(results):
        label = str(results["scenario"].iloc[0])
    top = cfg.noise.table_max_targets

    def lookup(n: int, mode: str) -> float:
        row = results[(results["N"] == n) & (results["mode"] == mode)]
        if row.empty:
            raise NoiseModelError(f"missing Monte Carlo data for N={n}, mode={mode}")
        return float(row["mean_fidelity"].iloc[0])

    fanouts = np.minimum.accumulate([lookup(n, "simultaneous") for n in range(2, top + 1)])
    entries = {
        "1q": cfg.noise.single_qubit_fidelity,
        "cnot": lookup(1, "serial"),
        **{f"fanout_{n}": float(f) for n, f in zip(range(2, top + 1), fanouts)},
    }
    return FidelityTable(scenario=label or "", entries=entries)


def fidelity_table_for(scenario_label: str, shots: int, seed: int) -> FidelityTable:
    """Run the Monte Carlo for N = 1..8 and build the table."""
    top = cfg.noise.table_max_targets
    results = run_monte_carlo(range(1, top + 1), make_scenario(scenario_label), shots, seed)
    return build_fidelity_table(results, scenario_label)


def fidelity_product(s: ScheduledCircuit, table: FidelityTable) -> float:
    product = 1.0
    for moment in s.moments:
        for gate in moment.gates:
            cls = gate_class(gate)
            if cls is not None:
                product *= table[cls]
    return product
