"""
Static SVG charts for depth tables and noise sweeps.
"""
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import pandas as pd  # noqa: E402

from src.benchmarks.depth_report import DEPTH_COLUMNS  # noqa: E402
from src.noise.monte_carlo import NOISE_COLUMNS  # noqa: E402
from src.utils.logger import logger  # noqa: E402

PLOT_KINDS = ("depth", "fidelity")

# Schedulers missing here (the formula lines) are drawn dashed.
_STYLE = {
    "simultaneous": {"color": "#0d6efd", "marker": "o"},
    "asap": {"color": "#fd7e14", "marker": "s"},
    "serialized": {"color": "#6c757d", "marker": "^"},
    "serial": {"color": "#6c757d", "marker": "^"},
}


def _check_schema(df: pd.DataFrame, columns: list[str], kind: str) -> None:
    if df.empty:
        raise ValueError(f"{kind} table is empty")
    missing = [c for c in columns if c not in df.columns]
    if missing:
        raise ValueError(f"{kind} table is missing columns {missing}")


def _save(fig, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)
    logger.debug(f"Chart saved → {path}")
    return path


def plot_depth(df: pd.DataFrame, path: Path) -> Path:
    """One panel per family, one line per scheduler, depth against size."""
    _check_schema(df, DEPTH_COLUMNS, "depth")
    families = list(dict.fromkeys(df["family"]))
    fig, axes = plt.subplots(1, len(families), figsize=(5 * len(families), 4), squeeze=False)

    for ax, family in zip(axes[0], families):
        sub = df[df["family"] == family]
        for scheduler, rows in sub.groupby("scheduler", sort=False):
            rows = rows.sort_values("size")
            style = _STYLE.get(scheduler, {"linestyle": "--", "color": "#198754"})
            ax.plot(rows["size"], rows["depth"], label=scheduler, **style)
        excluded = sub["excluded"].fillna("").iloc[0]
        ax.set_title(family if not excluded else f"{family} (excluding {excluded})")
        ax.set_xlabel("size")
        ax.set_ylabel("depth (lower is better)")
        ax.grid(alpha=0.3)
        ax.legend()

    return _save(fig, path)


def plot_fidelity(df: pd.DataFrame, path: Path) -> Path:
    """Mean GHZ fidelity against N per mode, with standard-error bars."""
    _check_schema(df, NOISE_COLUMNS, "fidelity")
    scenarios = list(dict.fromkeys(df["scenario"]))
    fig, axes = plt.subplots(1, len(scenarios), figsize=(5 * len(scenarios), 4), squeeze=False)

    for ax, name in zip(axes[0], scenarios):
        sub = df[df["scenario"] == name]
        for mode, rows in sub.groupby("mode", sort=False):
            rows = rows.sort_values("N")
            ax.errorbar(
                rows["N"], rows["mean_fidelity"], yerr=rows["std_error"],
                label=mode, capsize=3, **_STYLE.get(mode, {}),
            )
        ax.set_title(name)
        ax.set_xlabel("fan-out targets N")
        ax.set_ylabel("GHZ fidelity")
        ax.grid(alpha=0.3)
        ax.legend()

    return _save(fig, path)


def plot_table(df: pd.DataFrame, path: Path, kind: str) -> Path:
    if kind == "depth":
        return plot_depth(df, path)
    if kind == "fidelity":
        return plot_fidelity(df, path)
    raise ValueError(f"Unknown plot kind: {kind!r}. Choose from {list(PLOT_KINDS)}")
