"""Scaling experiments over doubling instance sizes.

Wall times are noisy; the work counters are exact and are what the
linear-time checks rely on.
"""

from __future__ import annotations

import csv
import statistics
import time
from dataclasses import dataclass, field
from typing import Callable, Sequence, TextIO

from .generators import family_game, ladder_family
from .linear import Solution, WorkCounters, solve
from .model import GameGraph
from .reference import bruteforce_solution, solve_naive

ENGINES: dict[str, Callable[[GameGraph], Solution]] = {
    "linear": solve,
    "naive": solve_naive,
    "brute": bruteforce_solution,
}

CSV_HEADER = ("family", "n", "m", "d", "algo", "repeat", "wall_ns",
              "edge_relaxations", "counter_inits", "target_scan_steps")


@dataclass
class Sample:
    family: str
    n: int
    m: int
    d: int
    algo: str
    repeat: int
    wall_ns: int
    work: WorkCounters

    def csv_row(self):
        return (self.family, self.n, self.m, self.d, self.algo, self.repeat, self.wall_ns,
                self.work.edge_relaxations, self.work.counter_inits, self.work.target_scan_steps)


@dataclass
class Row:
    family: str
    n: int
    m: int
    d: int
    algo: str
    median_wall_ns: float
    work: WorkCounters


@dataclass
class ScalingReport:
    family: str
    rows: list[Row] = field(default_factory=list)
    samples: list[Sample] = field(default_factory=list)

    def rows_for(self, algo: str) -> list[Row]:
        return sorted((r for r in self.rows if r.algo == algo), key=lambda r: r.n)

    @property
    def growth_ratios(self) -> dict[str, list[float]]:
        """Median wall-time ratio between consecutive sizes, per engine."""
        out = {}
        for algo in {r.algo for r in self.rows}:
            rows = self.rows_for(algo)
            out[algo] = [b.median_wall_ns / a.median_wall_ns if a.median_wall_ns else float("inf")
                         for a, b in zip(rows, rows[1:])]
        return out

    def work_ratios(self, algo: str, measure: Callable[[WorkCounters], int]) -> list[float]:
        rows = self.rows_for(algo)
        return [measure(b.work) / measure(a.work) for a, b in zip(rows, rows[1:])]


def _warm_up():
    # first naive call may trigger numba compilation
    solve_naive(ladder_family(2))


def timed(engine: Callable[[GameGraph], Solution], g: GameGraph) -> tuple[Solution, int]:
    t0 = time.perf_counter_ns()
    sol = engine(g)
    return sol, time.perf_counter_ns() - t0


def run_scaling(family: str, sizes: Sequence[int], algos: Sequence[str],
                repeats: int = 5, seed: int = 0) -> ScalingReport:
    sizes = list(sizes)
    for a, b in zip(sizes, sizes[1:]):
        if b != 2 * a:
            raise ValueError(f"sizes must double: {a} -> {b}")
    for algo in algos:
        if algo not in ENGINES:
            raise ValueError(f"unknown algo {algo!r}")
    if repeats < 1:
        raise ValueError("repeats must be positive")
    _warm_up()
    report = ScalingReport(family)
    for n in sizes:
        g = family_game(family, n, seed)
        for algo in sorted(algos):
            cell = []
            for r in range(repeats):
                sol, ns = timed(ENGINES[algo], g)
                cell.append(Sample(family, g.n, g.m, g.d, algo, r, ns, sol.work))
            report.samples.extend(cell)
            report.rows.append(Row(family, g.n, g.m, g.d, algo,
                                   statistics.median(s.wall_ns for s in cell), cell[0].work))
    return report


def write_csv(samples: Sequence[Sample], out: TextIO) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for s in sorted(samples, key=lambda s: (s.family, s.n, s.algo, s.repeat)):
        w.writerow(s.csv_row())
