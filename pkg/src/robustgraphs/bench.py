"""Scaling measurements: construction and query time per instance size."""

from __future__ import annotations

import gc
import time
from dataclasses import dataclass
from statistics import median

import numpy as np

from .corpus import dense_square, tg_instance, udg_instance
from .geometry import transmission_graph, unit_disk_graph
from .graph import ScanStats
from .tg import find_directed_triangle
from .udg import find_triangle_udg, girth_udg

PROBLEMS = ("triangle", "girth", "tg-triangle")

# Mean degrees of the sparse benchmark families.
GIRTH_BENCH_DEGREE = 2.0
TG_BENCH_DEGREE = 8.0


def bench_instance(problem: str, n: int, seed: int):
    if problem == "triangle":
        inst = dense_square(n, seed)
        build = unit_disk_graph
    elif problem == "girth":
        inst = udg_instance(n, GIRTH_BENCH_DEGREE, seed)
        build = unit_disk_graph
    elif problem == "tg-triangle":
        inst = tg_instance(n, TG_BENCH_DEGREE, seed)
        build = transmission_graph
    else:
        raise ValueError(f"unknown problem {problem!r}")
    return inst, build


def solver_for(problem: str):
    return {
        "triangle": find_triangle_udg,
        "girth": girth_udg,
        "tg-triangle": find_directed_triangle,
    }[problem]


def timed_query(problem: str, graph) -> tuple[object, int, ScanStats]:
    """Run one query; derived list views are dropped first so they are paid for."""
    solver = solver_for(problem)
    if hasattr(graph, "drop_caches"):
        graph.drop_caches()
    stats = ScanStats()
    gc.collect()
    gc.disable()
    try:
        t0 = time.perf_counter_ns()
        out = solver(graph, stats)
        dt = time.perf_counter_ns() - t0
    finally:
        gc.enable()
    return out, dt, stats


def run_bench(problem: str, sizes, seed: int = 0, reps: int = 5) -> list[dict]:
    """One row per size: medians over ``reps`` of construction and query time."""
    sizes = list(sizes)
    if sizes != sorted(sizes):
        raise ValueError("sizes must be ascending")
    if reps < 1:
        raise ValueError("reps must be >= 1")
    rows = []
    for n in sizes:
        inst, build = bench_instance(problem, n, seed)
        build_times, query_times = [], []
        graph = None
        for _ in range(reps):
            # construction is repeated only when cheap enough to matter
            if graph is None or problem != "triangle":
                del graph
                gc.collect()
                t0 = time.perf_counter_ns()
                graph = build(inst.sites)
                build_times.append(time.perf_counter_ns() - t0)
            out, dt, stats = timed_query(problem, graph)
            query_times.append(dt)
        row = {
            "n": graph.n,
            "m": graph.m,
            "construction_ns": int(median(build_times)),
            "query_ns": int(median(query_times)),
            "outcome": out.tag,
        }
        row.update({k: v for k, v in stats.as_dict().items()})
        rows.append(row)
        del graph
        gc.collect()
    return rows


@dataclass(frozen=True)
class BenchConfig:
    problem: str = "tg-triangle"
    sizes: tuple[int, ...] = (2**10, 2**11, 2**12, 2**13, 2**14)
    seed: int = 0
    reps: int = 5

    def __post_init__(self):
        if self.problem not in PROBLEMS:
            raise ValueError(f"unknown problem {self.problem!r}")
        object.__setattr__(self, "sizes", tuple(self.sizes))

    def run(self) -> list[dict]:
        return run_bench(self.problem, self.sizes, self.seed, self.reps)


def scaling_axis(problem: str, row: dict) -> int:
    """Input size the query time is regressed on: n, or n + m for digraphs."""
    return row["n"] + row["m"] if problem == "tg-triangle" else row["n"]


def loglog_slope(xs, ys) -> float:
    """Least-squares slope of log(y) against log(x)."""
    lx = np.log(np.asarray(xs, dtype=float))
    ly = np.log(np.asarray(ys, dtype=float))
    slope, _ = np.polyfit(lx, ly, 1)
    return float(slope)


CSV_COLUMNS = ["n", "m", "construction_ns", "query_ns", "outcome", "pair_tests", "scanned", "branch", "max_list_scans"]
