"""
Trapped-ion fan-out noise model.

A fan-out from control c onto N targets is the ZX interaction

    exp(-i (1+ε) (π/4) Z_c Σ_t X_t)

followed by ideal corrections Rx(-π/2) on every target and P(-Nπ/2) on the
control, which gives the exact multi-target CNOT at ε = 0. Two noise sources:

  overrotation  ε ~ Normal(0, σ) per entangling application (or ε = σ when systematic)
  dephasing     Rz(φ) on every driven qubit per application, φ ~ Normal(0, 2·t_gate/T_laser)

Simultaneous mode drives all N targets in one application; serial mode runs N
single-target applications, so the control dephases N times. Input is |+>|0...0>
and the ideal output is the GHZ state.

Dephasing commutes with everything that follows on the same qubit, and the
overrotation residual factors per target, so each shot has the closed form

    F = Π_t cos²(ε_t π/4) · cos²(Φ/2),   Φ = sum of all dephasing angles.
"""
from dataclasses import dataclass
from math import pi, sqrt

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from src.circuit_ir.circuit import h, p, rz, u
from src.config import cfg
from src.linalg.gates import rx
from src.linalg.simulator import apply_gate, zero_state

MODES = ("simultaneous", "serial")
SCENARIOS = ("current", "low_overrotation", "long_laser", "both")


class NoiseModelError(ValueError):
    """Raised for invalid noise-model inputs or missing Monte Carlo data."""


class NoiseParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    overrotation_sigma: float = Field(ge=0)
    gate_time: float = Field(ge=0)
    laser_coherence: float = Field(gt=0)
    single_qubit_time: float = Field(default=0.0, ge=0)

    @property
    def dephasing_variance(self) -> float:
        """Variance of the Rz angle a driven qubit picks up in one entangling gate and its corrections."""
        return 2.0 * (self.gate_time + self.single_qubit_time) / self.laser_coherence


class Scenario(BaseModel):
    model_config = ConfigDict(frozen=True)

    label: str
    params: NoiseParams


def scenario(label: str) -> Scenario:
    """Hardware scenario relative to the configured current-hardware numbers."""
    if label not in SCENARIOS:
        raise NoiseModelError(f"Unknown scenario: {label!r}. Choose from {list(SCENARIOS)}")
    nc = cfg.noise
    sigma = nc.overrotation_sigma
    coherence = nc.laser_coherence
    if label in ("low_overrotation", "both"):
        sigma /= nc.scenario_factor
    if label in ("long_laser", "both"):
        coherence *= nc.scenario_factor
    params = NoiseParams(
        overrotation_sigma=sigma,
        gate_time=nc.gate_time,
        laser_coherence=coherence,
        single_qubit_time=nc.single_qubit_time,
    )
    return Scenario(label=label, params=params)


@dataclass(frozen=True)
class ShotNoise:
    """Noise drawn for a batch of shots.

    eps:    (shots, applications) overrotation per entangling application
    phases: (shots, N + 1) total dephasing angle per qubit, control first
    """
    eps: np.ndarray
    phases: np.ndarray

    def __len__(self) -> int:
        return self.eps.shape[0]


def _check(n_targets: int, mode: str) -> None:
    if mode not in MODES:
        raise NoiseModelError(f"Unknown mode: {mode!r}. Choose from {list(MODES)}")
    if not 1 <= n_targets <= cfg.noise.max_targets:
        raise NoiseModelError(f"N must be in [1, {cfg.noise.max_targets}], got {n_targets}")


def draw_noise(
    n_targets: int,
    params: NoiseParams,
    mode: str,
    rng: np.random.Generator,
    shots: int = 1,
    systematic: bool = False,
    control_only: bool = False,
) -> ShotNoise:
    _check(n_targets, mode)
    applications = 1 if mode == "simultaneous" else n_targets
    sd = sqrt(params.dephasing_variance)

    if systematic:
        eps = np.full((shots, applications), params.overrotation_sigma)
    else:
        eps = rng.normal(0.0, params.overrotation_sigma, (shots, applications))

    control = rng.normal(0.0, sd, (shots, applications)).sum(axis=1)
    targets = rng.normal(0.0, sd, (shots, n_targets))
    if control_only:
        targets = np.zeros_like(targets)
    return ShotNoise(eps=eps, phases=np.column_stack([control, targets]))


# ── Statevector shot ───────────────────────────────────────────────────────

def ghz_state(num_qubits: int) -> np.ndarray:
    state = np.zeros(2 ** num_qubits, dtype=complex)
    state[0] = state[-1] = 1 / sqrt(2)
    return state


def _zx_fanout(state: np.ndarray, control: int, targets: list[int], eps: float) -> np.ndarray:
    theta = (1.0 + eps) * pi / 4
    for t in targets:
        state = apply_gate(state, h(t))
    idx = np.arange(state.shape[0])
    z_control = 1 - 2 * ((idx >> control) & 1)
    z_sum = sum(1 - 2 * ((idx >> t) & 1) for t in targets)
    state = state * np.exp(-1j * theta * z_control * z_sum)
    for t in targets:
        state = apply_gate(state, h(t))

    for t in targets:
        state = apply_gate(state, u(rx(-pi / 2), t))
    return apply_gate(state, p(-len(targets) * pi / 2, control))


def apply_noisy_fanout(n_targets: int, eps: np.ndarray, phases: np.ndarray, mode: str) -> np.ndarray:
    """Run one shot for given noise (one row of a ShotNoise)."""
    _check(n_targets, mode)
    control, targets = 0, list(range(1, n_targets + 1))
    groups = [targets] if mode == "simultaneous" else [[t] for t in targets]

    state = apply_gate(zero_state(n_targets + 1), h(control))
    for group, e in zip(groups, eps):
        state = _zx_fanout(state, control, group, float(e))
    for q, phi in enumerate(phases):
        state = apply_gate(state, rz(float(phi), q))
    return state


def noisy_fanout_shot(
    n_targets: int,
    params: NoiseParams,
    mode: str,
    rng: np.random.Generator,
    systematic: bool = False,
    control_only: bool = False,
) -> np.ndarray:
    """Final (N+1)-qubit state of one noisy GHZ preparation."""
    noise = draw_noise(n_targets, params, mode, rng, 1, systematic, control_only)
    return apply_noisy_fanout(n_targets, noise.eps[0], noise.phases[0], mode)


def closed_form_fidelity(noise: ShotNoise, n_targets: int) -> np.ndarray:
    """Per-shot GHZ fidelity for a batch of drawn noise."""
    eps = noise.eps
    per_target = np.repeat(eps, n_targets, axis=1) if eps.shape[1] == 1 else eps
    overrotation = np.prod(np.cos(per_target * pi / 4) ** 2, axis=1)
    dephasing = np.cos(noise.phases.sum(axis=1) / 2) ** 2
    return overrotation * dephasing
