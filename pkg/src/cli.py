"""
Click-based CLI for the fan-out Controlled-U toolkit.

Usage:
    python -m src.cli setup
    python -m src.cli synth --input u.json --control 3 --method simultaneous --output cu.json
    python -m src.cli verify cu.json reference.json --tol 1e-9
    python -m src.cli bench-depth --family swap-test --sizes 1..8 --output depth.csv
    python -m src.cli noise --scenario current --n-range 1..8 --seed 7 --output noise.csv
    python -m src.cli plot --input depth.csv --output depth.svg --kind depth
    python -m src.cli report --seed 7

Exit codes: 0 success, 1 verification mismatch, 2 I/O or parse error, 3 invalid input.
"""
from contextlib import contextmanager
from pathlib import Path

import click
from src.config import cfg
from src.utils.logger import setup_logger, logger

EXIT_MISMATCH = 1
EXIT_IO = 2
EXIT_INVALID = 3


@contextmanager
def _exit_codes():
    """Map library exceptions onto the documented exit codes."""
    import pandas as pd
    from src.circuit_ir.serialization import CircuitFormatError

    try:
        yield
    except (OSError, CircuitFormatError, pd.errors.ParserError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        raise SystemExit(EXIT_IO)
    except ValueError as e:
        # CircuitValidationError, SynthesisError, NoiseModelError, SimulationError
        for line in getattr(e, "diagnostics", None) or [str(e)]:
            logger.error(line)
        raise SystemExit(EXIT_INVALID)


def _read_circuit(path: str):
    from src.circuit_ir.circuit import require_valid
    from src.circuit_ir.serialization import load_circuit

    return require_valid(load_circuit(Path(path).read_text()))


def _write_text(text: str, output: str | None) -> None:
    if output is None:
        click.echo(text)
        return
    path = Path(output)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    logger.info(f"Wrote {path}")


def _csv_list(text: str | None) -> list[str] | None:
    if text is None:
        return None
    return [part.strip() for part in text.split(",") if part.strip()]


@click.group()
@click.option("--log-level", default="INFO", show_default=True, help="Console and file log level.")
@click.pass_context
def cli(ctx: click.Context, log_level: str) -> None:
    """⚛️  Fan-out Controlled-U synthesis and scheduling"""
    setup_logger(log_dir=cfg.paths.logs, level=log_level.upper(), command=ctx.invoked_subcommand)


@cli.command()
def setup() -> None:
    """Initialize project directories."""
    logger.info("Setting up project directories...")
    cfg.paths.setup()
    logger.success("✅ All directories created.")


@cli.command()
@click.option("--input", "input_path", required=True, help="Circuit JSON describing U.")
@click.option("--control", required=True, type=int, help="Control qubit index (unused by U).")
@click.option(
    "--method", default="simultaneous", show_default=True,
    type=click.Choice(["simultaneous", "serial", "asap"]),
    help="Fan-out templates, block-sequential baseline, or ASAP of the lowered reference.",
)
@click.option("--output", default=None, help="Scheduled circuit JSON (stdout when omitted).")
def synth(input_path: str, control: int, method: str, output: str | None) -> None:
    """Synthesize Controlled-U and write the scheduled circuit."""
    from src.circuit_ir.serialization import schedule_to_json
    from src.decompose.networks import expand
    from src.schedule.moments import asap_schedule
    from src.synthesis.controlled_u import (
        ControlledUSpec, reference_controlled_u, serialized_controlled_u, synth_controlled_u,
    )

    with _exit_codes():
        spec = ControlledUSpec(control, _read_circuit(input_path))
        if method == "simultaneous":
            s = synth_controlled_u(spec)
        elif method == "serial":
            s = serialized_controlled_u(spec)
        else:
            s = asap_schedule(expand(reference_controlled_u(spec)))
        _write_text(schedule_to_json(s), output)
    logger.success(f"✅ {method} Controlled-U: {len(s)} moments on {s.num_qubits} qubits.")


@cli.command()
@click.argument("a")
@click.argument("b")
@click.option("--tol", default=None, type=float, help="Max-entry tolerance (default from config).")
def verify(a: str, b: str, tol: float | None) -> None:
    """Check two circuits are equal up to global phase."""
    from src.linalg.simulator import circuit_unitary, phase_aligned_deviation

    tol = cfg.simulator.equivalence_tolerance if tol is None else tol
    with _exit_codes():
        ca, cb = _read_circuit(a), _read_circuit(b)
        if ca.num_qubits != cb.num_qubits:
            raise ValueError(f"width mismatch: {ca.num_qubits} vs {cb.num_qubits} qubits")
        deviation = phase_aligned_deviation(circuit_unitary(ca), circuit_unitary(cb))

    click.echo(f"max deviation: {deviation:.3e}")
    if deviation > tol:
        logger.error(f"❌ Circuits differ (deviation {deviation:.3e} > tol {tol:.1e}).")
        raise SystemExit(EXIT_MISMATCH)
    logger.success(f"✅ Equivalent up to global phase (tol {tol:.1e}).")


@cli.command("bench-depth")
@click.option("--family", required=True, help="Benchmark family, e.g. swap-test or implicit-memory.")
@click.option("--sizes", default=None, help="'A..B' or comma list (default per family).")
@click.option("--schedulers", default=None, help="Comma list (default: every scheduler the family has).")
@click.option("--exclude", default=None, help="Comma list of gate kinds left out of depth ('' for none).")
@click.option("--width", default=None, type=int, help="Implicit-memory bitwidth W.")
@click.option("--seed", default=cfg.bench.seed, show_default=True, type=int, help="Seed for random U families.")
@click.option("--output", default=None, help="CSV path (stdout when omitted).")
def bench_depth(
    family: str, sizes: str | None, schedulers: str | None, exclude: str | None,
    width: int | None, seed: int, output: str | None,
) -> None:
    """Depth table of a benchmark family across sizes and schedulers."""
    from src.benchmarks.depth_report import SCHEDULERS, depth_rows, family_sizes, parse_sizes
    from src.circuit_ir.circuit import GateKind

    with _exit_codes():
        size_list = parse_sizes(sizes) if sizes else family_sizes(family)
        kinds = None
        if exclude is not None:
            names = _csv_list(exclude)
            unknown = [k for k in names if k not in {g.value for g in GateKind}]
            if unknown:
                raise ValueError(f"Unknown gate kinds {unknown}. Choose from {[g.value for g in GateKind]}")
            kinds = frozenset(GateKind(k) for k in names)
        df = depth_rows(family, size_list, _csv_list(schedulers) or list(SCHEDULERS), kinds, seed, width)
        _write_text(df.to_csv(index=False).rstrip("\n"), output)
    logger.success(f"✅ {family}: {len(df)} depth rows.")


@cli.command()
@click.option("--scenario", "scenario_label", default="current", show_default=True, help="Hardware scenario.")
@click.option("--n-range", default="1..8", show_default=True, help="Fan-out target counts, 'A..B'.")
@click.option("--shots", default=cfg.noise.shots, show_default=True, type=int, help="Shots per (N, mode).")
@click.option("--seed", required=True, type=int, help="Master seed.")
@click.option("--systematic", is_flag=True, help="Fix the overrotation at +σ instead of sampling it.")
@click.option("--control-only", is_flag=True, help="Dephase only the control qubit.")
@click.option("--n-jobs", default=cfg.noise.n_jobs, show_default=True, type=int, help="joblib workers.")
@click.option("--output", default=None, help="CSV path (stdout when omitted).")
def noise(
    scenario_label: str, n_range: str, shots: int, seed: int, systematic: bool,
    control_only: bool, n_jobs: int, output: str | None,
) -> None:
    """Monte Carlo GHZ fidelity of simultaneous vs serial fan-out."""
    from src.benchmarks.depth_report import parse_sizes
    from src.noise.model import scenario
    from src.noise.monte_carlo import run_monte_carlo

    with _exit_codes():
        df = run_monte_carlo(
            parse_sizes(n_range), scenario(scenario_label), shots, seed,
            systematic=systematic, control_only=control_only, n_jobs=n_jobs,
        )
        _write_text(df.to_csv(index=False).rstrip("\n"), output)
    logger.success(f"✅ Noise sweep {scenario_label}: {len(df)} rows.")


@cli.command()
@click.option("--input", "input_path", required=True, help="Depth or noise CSV.")
@click.option("--output", required=True, help="SVG path.")
@click.option("--kind", default="depth", show_default=True, type=click.Choice(["depth", "fidelity"]))
def plot(input_path: str, output: str, kind: str) -> None:
    """Render a depth or fidelity CSV as an SVG chart."""
    import pandas as pd
    from src.eval.plots import plot_table

    with _exit_codes():
        df = pd.read_csv(input_path, keep_default_na=False) if kind == "depth" else pd.read_csv(input_path)
        path = plot_table(df, Path(output), kind)
    logger.success(f"✅ Chart saved → {path}")


@cli.command()
@click.option("--shots", default=cfg.noise.shots, show_default=True, type=int, help="Shots per (N, mode).")
@click.option("--seed", required=True, type=int, help="Master seed.")
@click.option("--output-dir", default=None, help="Directory for CSVs, charts and the report.")
def report(shots: int, seed: int, output_dir: str | None) -> None:
    """Run noise, depth and fidelity-product benchmarks and write a markdown report."""
    from src.eval.report_generator import run_report

    cfg.paths.setup()
    with _exit_codes():
        path = run_report(shots=shots, seed=seed, out_dir=Path(output_dir) if output_dir else None)
    logger.success(f"✅ Report complete → {path}")


if __name__ == "__main__":
    cli()
