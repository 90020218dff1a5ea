"""Timing and work-counter runs over the generator families."""

from __future__ import annotations

import csv
import time
from typing import IO, Iterable, Iterator

import numpy as np

from .generators import GeneratorSpec, generate
from .solver import solve

CSV_HEADER = ("family", "n", "algorithm", "atoms", "size", "iterations", "wall_time_ns",
              "in_list_inspections")


def run(family: str, sizes: Iterable[int], algorithms: Iterable[str], reps: int = 1,
        extra: dict | None = None) -> Iterator[dict]:
    """Yield one row per (size, algorithm, repetition).

    ``in_list_inspections`` is the run's primary work counter: IN-list
    entries examined by the top-down search, or rule visits of the
    bottom-up least-model passes for ``vg`` and ``alg2``.
    """
    algorithms = list(algorithms)
    for n in sizes:
        p = generate(GeneratorSpec(family, n, dict(extra or {})))
        for algorithm in algorithms:
            for _ in range(reps):
                start = time.perf_counter_ns()
                _, stats = solve(p, algorithm)
                elapsed = time.perf_counter_ns() - start
                yield {
                    "family": family,
                    "n": n,
                    "algorithm": algorithm,
                    "atoms": p.n_atoms,
                    "size": p.size,
                    "iterations": stats.iterations,
                    "wall_time_ns": elapsed,
                    "in_list_inspections": stats.work,
                }


def write_csv(rows: Iterable[dict], out: IO[str]) -> None:
    writer = csv.DictWriter(out, fieldnames=CSV_HEADER, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
        out.flush()


def growth_exponent(ns: Iterable[float], values: Iterable[float]) -> float:
    """Slope of the least-squares line through ``(log n, log value)``."""
    slope, _ = np.polyfit(np.log(np.asarray(list(ns), float)), np.log(np.asarray(list(values), float)), 1)
    return float(slope)
