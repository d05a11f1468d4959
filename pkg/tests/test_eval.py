"""
Unit tests for the fidelity comparison, charts and the benchmark report.
"""
import pandas as pd
import pytest

from src.config import cfg
from src.eval.plots import plot_depth, plot_fidelity, plot_table
from src.eval.report_generator import (
    COMPARISON_COLUMNS, FIDELITY_SCENARIOS, build_fidelity_comparison, fidelity_benchmarks,
    infidelity_reduction, run_report,
)
from src.noise.fidelity_table import FidelityTable, fidelity_table_for, gate_class
from src.noise.monte_carlo import run_monte_carlo
from src.noise.model import scenario


def toy_table(cnot: float, fanout_discount: float) -> FidelityTable:
    """fanout_k costs the same as k**fanout_discount CNOTs."""
    entries = {"1q": 0.9999, "cnot": cnot}
    entries.update({f"fanout_{k}": cnot ** (k ** fanout_discount) for k in range(2, 9)})
    return FidelityTable(scenario="toy", entries=entries)


@pytest.fixture(scope="module")
def benchmarks():
    return fidelity_benchmarks()


class TestFidelityComparison:
    def test_reduction(self):
        assert infidelity_reduction(0.9, 0.8) == pytest.approx(0.5)
        assert infidelity_reduction(0.8, 0.8) == 0.0
        assert infidelity_reduction(1.0, 1.0) == 0.0

    def test_fanouts_fit_the_table(self, benchmarks):
        table = toy_table(0.99, 1.0)
        for s in benchmarks.values():
            for gate in s.gates():
                cls = gate_class(gate)
                assert cls is None or cls in table.entries

    def test_positive_when_fanout_is_cheaper(self, benchmarks):
        df = build_fidelity_comparison({"toy": toy_table(0.99, 0.8)}, benchmarks)
        assert list(df.columns) == COMPARISON_COLUMNS
        assert len(df) == 5
        assert (df["reduction"] > 0).all()
        assert (df["simultaneous"] > df["serialized"]).all()

    def test_zero_when_fanout_equals_cnot_chain(self, benchmarks):
        df = build_fidelity_comparison({"toy": toy_table(0.99, 1.0)}, benchmarks)
        assert df["reduction"].abs().max() < 1e-9

    @pytest.mark.slow
    def test_monte_carlo_tables(self, benchmarks):
        tables = {label: fidelity_table_for(label, 20_000, seed=7) for label in FIDELITY_SCENARIOS}
        df = build_fidelity_comparison(tables, benchmarks).set_index(["benchmark", "scenario"])
        for name in benchmarks:
            current = df.loc[(name, "current"), "reduction"]
            improved = df.loc[(name, "low_overrotation"), "reduction"]
            assert 0.02 <= current <= 0.40
            assert improved > current


class TestPlots:
    def test_depth_chart(self, tmp_path):
        df = pd.DataFrame({
            "family": ["swap-test"] * 4,
            "size": [1, 2, 1, 2],
            "scheduler": ["simultaneous", "simultaneous", "formula:coarse", "formula:coarse"],
            "depth": [14, 14, 12, 24],
            "excluded": ["h"] * 4,
        })
        path = plot_depth(df, tmp_path / "depth.svg")
        assert "<svg" in path.read_text()

    def test_fidelity_chart(self, tmp_path):
        df = run_monte_carlo([1, 2], scenario("current"), 1000, seed=1)
        path = plot_table(df, tmp_path / "charts" / "noise.svg", "fidelity")
        assert path.exists()
        assert "<svg" in path.read_text()

    def test_empty_table(self, tmp_path):
        with pytest.raises(ValueError, match="empty"):
            plot_fidelity(pd.DataFrame(), tmp_path / "x.svg")

    def test_missing_columns(self, tmp_path):
        with pytest.raises(ValueError, match="missing"):
            plot_depth(pd.DataFrame({"family": ["swap-test"]}), tmp_path / "x.svg")

    def test_unknown_kind(self, tmp_path):
        with pytest.raises(ValueError, match="Choose from"):
            plot_table(pd.DataFrame(), tmp_path / "x.svg", "heatmap")


class TestReport:
    def test_small_report(self, tmp_path, monkeypatch):
        monkeypatch.setattr(cfg.bench, "swap_test_sizes", "1..2")
        monkeypatch.setattr(cfg.bench, "hadamard_sizes", "2..3")
        monkeypatch.setattr(cfg.bench, "memory_sizes", "2..2")
        monkeypatch.setattr(cfg.bench, "fidelity_width", 3)
        monkeypatch.setattr(cfg.bench, "fidelity_memory_n", 2)

        report = run_report(shots=1000, seed=1, out_dir=tmp_path)
        for name in ("noise.csv", "depth.csv", "fidelity_comparison.csv", "noise.svg", "depth.svg"):
            assert (tmp_path / name).exists()
        text = report.read_text()
        assert "## Depth" in text
        assert "swap-test k=3" in text
        assert len(pd.read_csv(tmp_path / "fidelity_comparison.csv")) == 5 * len(FIDELITY_SCENARIOS)
