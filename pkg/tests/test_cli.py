"""
CLI tests through click's CliRunner.
"""
import sys

import pandas as pd
import pytest
from click.testing import CliRunner

from src.cli import EXIT_INVALID, EXIT_IO, EXIT_MISMATCH, cli
from src.circuit_ir.circuit import Circuit, cx, swap
from src.circuit_ir.serialization import schedule_from_json, to_json
from src.config import cfg
from src.synthesis.controlled_u import ControlledUSpec, reference_controlled_u
from src.utils.logger import logger


@pytest.fixture(autouse=True)
def isolated_logs(tmp_path, monkeypatch):
    monkeypatch.setattr(cfg.paths, "logs", tmp_path / "logs")
    yield
    logger.remove()
    logger.add(sys.stderr, level="INFO")


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def u_file(tmp_path, four_qubit_u):
    path = tmp_path / "u.json"
    path.write_text(to_json(four_qubit_u))
    return path


class TestSynth:
    def test_four_qubit_example(self, runner, u_file, tmp_path):
        out = tmp_path / "cu.json"
        result = runner.invoke(cli, ["synth", "--input", str(u_file), "--control", "4", "--output", str(out)])
        assert result.exit_code == 0
        s = schedule_from_json(out.read_text())
        assert len(s) == 17
        assert s.num_qubits == 5

    def test_logs_to_command_file(self, runner, u_file, tmp_path):
        out = tmp_path / "cu.json"
        runner.invoke(cli, ["synth", "--input", str(u_file), "--control", "4", "--output", str(out)])
        assert list((tmp_path / "logs").glob("fanout-synth_*.log"))

    def test_serial_is_deeper(self, runner, u_file, tmp_path):
        fast, slow = tmp_path / "fast.json", tmp_path / "slow.json"
        runner.invoke(cli, ["synth", "--input", str(u_file), "--control", "4", "--output", str(fast)])
        result = runner.invoke(
            cli, ["synth", "--input", str(u_file), "--control", "4", "--method", "serial", "--output", str(slow)]
        )
        assert result.exit_code == 0
        assert len(schedule_from_json(slow.read_text())) > len(schedule_from_json(fast.read_text()))

    def test_missing_file(self, runner, tmp_path):
        result = runner.invoke(cli, ["synth", "--input", str(tmp_path / "nope.json"), "--control", "4"])
        assert result.exit_code == EXIT_IO

    def test_malformed_json(self, runner, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"version": 1, "num_qubits": ')
        result = runner.invoke(cli, ["synth", "--input", str(bad), "--control", "4"])
        assert result.exit_code == EXIT_IO

    def test_control_inside_u(self, runner, u_file):
        result = runner.invoke(cli, ["synth", "--input", str(u_file), "--control", "1"])
        assert result.exit_code == EXIT_INVALID


class TestVerify:
    def test_synthesis_matches_reference(self, runner, u_file, tmp_path, four_qubit_u):
        out, ref = tmp_path / "cu.json", tmp_path / "ref.json"
        runner.invoke(cli, ["synth", "--input", str(u_file), "--control", "4", "--output", str(out)])
        ref.write_text(to_json(reference_controlled_u(ControlledUSpec(4, four_qubit_u))))
        result = runner.invoke(cli, ["verify", str(out), str(ref)])
        assert result.exit_code == 0
        assert "max deviation" in result.output

    def test_mismatch(self, runner, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        a.write_text(to_json(Circuit(2, (cx(0, 1),))))
        b.write_text(to_json(Circuit(2, (swap(0, 1),))))
        assert runner.invoke(cli, ["verify", str(a), str(b)]).exit_code == EXIT_MISMATCH

    def test_width_mismatch(self, runner, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        a.write_text(to_json(Circuit(2, (cx(0, 1),))))
        b.write_text(to_json(Circuit(3, (cx(0, 1),))))
        assert runner.invoke(cli, ["verify", str(a), str(b)]).exit_code == EXIT_INVALID


class TestBenchDepth:
    def test_swap_test(self, runner, tmp_path):
        out = tmp_path / "depth.csv"
        result = runner.invoke(cli, [
            "bench-depth", "--family", "swap-test", "--sizes", "1..3",
            "--schedulers", "simultaneous,serialized", "--output", str(out),
        ])
        assert result.exit_code == 0
        df = pd.read_csv(out, keep_default_na=False)
        sim = df[df["scheduler"] == "simultaneous"]
        assert sim["depth"].tolist() == [14, 14, 14]
        assert df[df["scheduler"] == "serialized"]["depth"].tolist() == [14, 28, 42]

    def test_no_exclusion(self, runner, tmp_path):
        out = tmp_path / "depth.csv"
        result = runner.invoke(cli, [
            "bench-depth", "--family", "swap-test", "--sizes", "2",
            "--schedulers", "simultaneous", "--exclude", "", "--output", str(out),
        ])
        assert result.exit_code == 0
        assert pd.read_csv(out)["depth"].tolist() == [16]

    def test_unknown_exclude_kind(self, runner):
        result = runner.invoke(cli, ["bench-depth", "--family", "swap-test", "--sizes", "1", "--exclude", "cz"])
        assert result.exit_code == EXIT_INVALID

    def test_unknown_family(self, runner):
        result = runner.invoke(cli, ["bench-depth", "--family", "grover", "--sizes", "2"])
        assert result.exit_code == EXIT_INVALID


class TestNoise:
    ARGS = ["noise", "--scenario", "both", "--n-range", "1..2", "--shots", "1000", "--seed", "3"]

    def test_deterministic(self, runner, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert runner.invoke(cli, [*self.ARGS, "--output", str(a)]).exit_code == 0
        assert runner.invoke(cli, [*self.ARGS, "--output", str(b)]).exit_code == 0
        assert a.read_text() == b.read_text()
        assert len(pd.read_csv(a)) == 4

    def test_row_count(self, runner, tmp_path):
        out = tmp_path / "noise.csv"
        result = runner.invoke(cli, [
            "noise", "--n-range", "2..8", "--shots", "1000", "--seed", "7", "--output", str(out),
        ])
        assert result.exit_code == 0
        df = pd.read_csv(out)
        assert len(df) == 14
        assert set(df["scenario"]) == {"current"}

    def test_seed_required(self, runner):
        result = runner.invoke(cli, ["noise", "--n-range", "1..2"])
        assert result.exit_code == 2

    def test_too_few_shots(self, runner):
        result = runner.invoke(cli, ["noise", "--shots", "10", "--seed", "1"])
        assert result.exit_code == EXIT_INVALID

    def test_unknown_scenario(self, runner):
        result = runner.invoke(cli, ["noise", "--scenario", "future", "--seed", "1"])
        assert result.exit_code == EXIT_INVALID


class TestPlot:
    def test_depth_chart(self, runner, tmp_path):
        csv, svg = tmp_path / "depth.csv", tmp_path / "depth.svg"
        runner.invoke(cli, [
            "bench-depth", "--family", "implicit-memory", "--sizes", "2",
            "--schedulers", "simultaneous,serialized,formula:qrom", "--output", str(csv),
        ])
        result = runner.invoke(cli, ["plot", "--input", str(csv), "--output", str(svg)])
        assert result.exit_code == 0
        assert "<svg" in svg.read_text()

    def test_empty_table(self, runner, tmp_path):
        csv = tmp_path / "empty.csv"
        csv.write_text("family,size,scheduler,depth,excluded\n")
        result = runner.invoke(cli, ["plot", "--input", str(csv), "--output", str(tmp_path / "x.svg")])
        assert result.exit_code == EXIT_INVALID

    def test_missing_input(self, runner, tmp_path):
        result = runner.invoke(cli, ["plot", "--input", str(tmp_path / "none.csv"), "--output", str(tmp_path / "x.svg")])
        assert result.exit_code == EXIT_IO
