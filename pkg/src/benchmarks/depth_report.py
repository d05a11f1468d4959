"""
Depth tables for every benchmark family.

Each family maps a size (k, width or n) to its schedules under the three
executable schedulers plus closed-form comparison lines:

  simultaneous    fan-out templates
  serialized      each high-level controlled gate lowered and scheduled alone
  asap            program-order high-level circuit, lowered, ASAP-scheduled
  formula:coarse  12k coarse-grained line (swap-test)
  formula:qram    W·2^n bucket-brigade line (explicit-memory)
  formula:qrom    W·2^n unary-iteration line (implicit-memory)
"""
from dataclasses import dataclass, asdict
from typing import Callable

import pandas as pd

from src.benchmarks import hadamard_test as ht
from src.benchmarks import memory as mem
from src.benchmarks import swap_test as st
from src.benchmarks.u_family import gen_u_family
from src.circuit_ir.circuit import GateKind
from src.config import cfg
from src.schedule.alignment import fanout_align
from src.schedule.moments import ScheduledCircuit, asap_schedule, depth, flatten
from src.synthesis.controlled_u import coarse_grained_depth
from src.utils.logger import logger

SCHEDULERS = ("simultaneous", "serialized", "asap", "formula:coarse", "formula:qram", "formula:qrom")
EXECUTABLE = ("simultaneous", "serialized", "asap")
HADAMARD_FAMILIES = {
    "hadamard-qft": "qft",
    "hadamard-brickwork": "brickwork",
    "hadamard-hardware-efficient": "hardware_efficient",
    "hadamard-swap-network": "swap_network",
}
FAMILIES = ("swap-test", "interference", *HADAMARD_FAMILIES, "explicit-memory", "implicit-memory")
DEPTH_COLUMNS = ["family", "size", "scheduler", "depth", "excluded"]


@dataclass(frozen=True)
class DepthReport:
    family: str
    size: int
    scheduler: str
    depth: int
    excluded: str


def default_exclude(family: str) -> frozenset[GateKind]:
    return frozenset({GateKind.H}) if family == "swap-test" else frozenset()


def no_deeper_than_asap(template: ScheduledCircuit, asap: ScheduledCircuit) -> ScheduledCircuit:
    """
    Simultaneous schedule that never loses to the fine-grained ASAP baseline.

    Mixed layers cost the templates 17 moments each, which can exceed ASAP on
    small bodies; the ASAP circuit after fan-out alignment is used instead.
    """
    if depth(template) <= depth(asap):
        return template
    aligned = asap_schedule(fanout_align(flatten(asap)))
    logger.debug(f"{template.label}: template depth {depth(template)} > asap {depth(asap)}, aligned {depth(aligned)}")
    return ScheduledCircuit(aligned.num_qubits, aligned.moments, template.label)


def implicit_data(n: int, width: int | None = None) -> tuple[list[int], int]:
    """First 2^n primes and a bitwidth large enough to hold them."""
    data = mem.primes(2 ** n)
    needed = max(v.bit_length() for v in data)
    return data, max(width or 0, needed)


def family_schedules(
    family: str, size: int, seed: int, width: int | None = None,
) -> tuple[dict[str, Callable[[], ScheduledCircuit]], dict[str, int]]:
    """Lazy schedule builders and closed-form depths for one family/size."""
    if family == "swap-test":
        return (
            {
                "simultaneous": lambda: st.build_swap_test(size, optimized=True),
                "serialized": lambda: st.swap_test_serialized(size),
                "asap": lambda: st.swap_test_asap(size),
            },
            {"formula:coarse": coarse_grained_depth(size)},
        )

    if family == "interference":
        depth_ = cfg.bench.u_family_depth
        u_a = gen_u_family("brickwork", size, depth_, seed)
        u_b = gen_u_family("brickwork", size, depth_, seed + 1)
        return (
            {
                "simultaneous": lambda: no_deeper_than_asap(
                    ht.build_interference(u_a, u_b), ht.interference_asap(u_a, u_b)
                ),
                "serialized": lambda: ht.build_interference(u_a, u_b, serialized=True),
                "asap": lambda: ht.interference_asap(u_a, u_b),
            },
            {},
        )

    if family in HADAMARD_FAMILIES:
        u = gen_u_family(HADAMARD_FAMILIES[family], size, cfg.bench.u_family_depth, seed)
        return (
            {
                "simultaneous": lambda: no_deeper_than_asap(ht.build_hadamard_test(u), ht.hadamard_test_asap(u)),
                "serialized": lambda: ht.build_hadamard_test(u, serialized=True),
                "asap": lambda: ht.hadamard_test_asap(u),
            },
            {},
        )

    if family == "explicit-memory":
        layout = mem.MemoryLayout(size)
        return (
            {
                "simultaneous": lambda: mem.build_explicit_memory(layout),
                "serialized": lambda: mem.explicit_memory_serialized(layout),
                "asap": lambda: mem.explicit_memory_asap(layout),
            },
            {"formula:qram": layout.width * 2 ** size},
        )

    if family == "implicit-memory":
        data, w = implicit_data(size, width)
        return (
            {
                "simultaneous": lambda: mem.build_implicit_memory(data, w),
                "serialized": lambda: mem.implicit_memory_serialized(data, w),
                "asap": lambda: mem.implicit_memory_asap(data, w),
            },
            {"formula:qrom": w * 2 ** size},
        )

    raise ValueError(f"Unknown family: {family!r}. Choose from {list(FAMILIES)}")


def depth_rows(
    family: str,
    sizes: list[int],
    schedulers: list[str] | None = None,
    exclude: frozenset[GateKind] | None = None,
    seed: int | None = None,
    width: int | None = None,
) -> pd.DataFrame:
    """One DepthReport row per (size, scheduler) the family supports."""
    schedulers = list(schedulers or EXECUTABLE)
    unknown = [s for s in schedulers if s not in SCHEDULERS]
    if unknown:
        raise ValueError(f"Unknown schedulers: {unknown}. Choose from {list(SCHEDULERS)}")
    excluded = default_exclude(family) if exclude is None else frozenset(exclude)
    excluded_text = "+".join(sorted(k.value for k in excluded))
    seed = cfg.bench.seed if seed is None else seed

    rows: list[DepthReport] = []
    for size in sizes:
        builders, formulas = family_schedules(family, size, seed, width)
        for name in schedulers:
            if name in builders:
                value = depth(builders[name](), excluded)
            elif name in formulas:
                value = formulas[name]
            else:
                logger.debug(f"{family}: scheduler {name} has no row")
                continue
            rows.append(DepthReport(family, size, name, value, excluded_text))

    df = pd.DataFrame([asdict(r) for r in rows], columns=DEPTH_COLUMNS)
    for problem in ordering_violations(df):
        logger.warning(problem)
    return df


def ordering_violations(df: pd.DataFrame) -> list[str]:
    """Rows where simultaneous <= asap <= serialized fails."""
    problems = []
    for (family, size), group in df.groupby(["family", "size"]):
        d = dict(zip(group["scheduler"], group["depth"]))
        order = [("simultaneous", "asap"), ("asap", "serialized"), ("simultaneous", "serialized")]
        for lo, hi in order:
            if lo in d and hi in d and d[lo] > d[hi]:
                problems.append(f"{family} size {size}: {lo} depth {d[lo]} > {hi} depth {d[hi]}")
    return problems


def parse_sizes(text: str) -> list[int]:
    """'A..B' inclusive range, or a comma list such as '2,4,8'."""
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = (int(part) for part in text.split("..", 1))
            sizes = list(range(lo, hi + 1))
        else:
            sizes = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ValueError(f"sizes must look like 'A..B' or '1,2,3', got {text!r}") from None
    if not sizes or min(sizes) < 1:
        raise ValueError(f"sizes must be a non-empty list of positive integers, got {text!r}")
    return sizes


def family_sizes(family: str) -> list[int]:
    """Default size sweep of a family."""
    if family == "swap-test":
        return parse_sizes(cfg.bench.swap_test_sizes)
    if family in ("explicit-memory", "implicit-memory"):
        return parse_sizes(cfg.bench.memory_sizes)
    if family == "interference" or family in HADAMARD_FAMILIES:
        return parse_sizes(cfg.bench.hadamard_sizes)
    raise ValueError(f"Unknown family: {family!r}. Choose from {list(FAMILIES)}")


def build_depth_table(families: list[str] | None = None, seed: int | None = None) -> pd.DataFrame:
    """Every scheduler row over each family's default sweep."""
    frames = [
        depth_rows(family, family_sizes(family), list(SCHEDULERS), seed=seed)
        for family in (families or FAMILIES)
    ]
    return pd.concat(frames, ignore_index=True)
