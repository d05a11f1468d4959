"""
Project-wide configuration using Pydantic Settings.
Paths, simulator guards, noise-model constants and benchmark defaults live here.
"""
from pathlib import Path
from pydantic_settings import BaseSettings


ROOT_DIR = Path(__file__).resolve().parent.parent


class PathConfig(BaseSettings):
    root: Path = ROOT_DIR
    data: Path = ROOT_DIR / "data"
    results: Path = ROOT_DIR / "data" / "results"
    logs: Path = ROOT_DIR / "logs"

    def setup(self) -> None:
        """Create all directories if they don't exist."""
        for field_name, path in self.model_dump().items():
            if isinstance(path, Path):
                path.mkdir(parents=True, exist_ok=True)

    model_config = {"env_prefix": "FANOUT_PATH_"}


class SimulatorConfig(BaseSettings):
    max_unitary_qubits: int = 12  # dense 4096 x 4096 matrix
    norm_tolerance: float = 1e-10
    unitary_tolerance: float = 1e-10
    equivalence_tolerance: float = 1e-9

    model_config = {"env_prefix": "FANOUT_SIM_"}


class NoiseConfig(BaseSettings):
    # Trapped-ion "current hardware" scenario
    overrotation_sigma: float = 0.05
    gate_time: float = 100e-6  # seconds per entangling interaction
    laser_coherence: float = 80e-3  # seconds
    single_qubit_time: float = 0.0  # seconds of corrections around each entangling interaction
    single_qubit_fidelity: float = 0.9999
    scenario_factor: float = 5.0

    # Monte Carlo
    shots: int = 100_000
    min_shots: int = 1_000
    chunk_size: int = 10_000
    n_jobs: int = 1
    max_targets: int = 12
    table_max_targets: int = 8

    model_config = {"env_prefix": "FANOUT_NOISE_"}


class BenchConfig(BaseSettings):
    swap_test_sizes: str = "1..8"
    hadamard_sizes: str = "2..8"
    memory_sizes: str = "2..4"
    u_family_depth: int = 2
    seed: int = 7
    fidelity_width: int = 8
    fidelity_memory_n: int = 4

    model_config = {"env_prefix": "FANOUT_BENCH_"}


class Config:
    """Unified project configuration."""

    paths: PathConfig = PathConfig()
    simulator: SimulatorConfig = SimulatorConfig()
    noise: NoiseConfig = NoiseConfig()
    bench: BenchConfig = BenchConfig()


# Singleton instance
cfg = Config()
