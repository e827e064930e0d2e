"""Empirical scaling of the reach-set closure sweep.

Three DAG families:

* ``sparse``: disjoint blocks of about 16 vertices, each a random DAG inside the
  block, with vertex ids shuffled.  Closures stay linear in ``n``.
* ``dense``: one random DAG with edge probability ``density``.
* ``constant``: a perfect matching, so each vertex does O(1) union work.
"""

from __future__ import annotations

import csv
import json
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .closure import gk_closure
from .graph import DirectedGraph

FAMILIES = ("sparse", "dense", "constant")
BLOCK = 16


@dataclass(frozen=True)
class BenchConfig:
    family: str = "sparse"
    sizes: tuple[int, ...] = tuple(2**k for k in range(10, 16))
    repeats: int = 3
    seed: int = 0
    density: float = 0.05
    block: int = BLOCK


@dataclass
class BenchPoint:
    n: int
    m: int
    m_closure: int
    wall_time: float
    work_counter: int


@dataclass
class BenchReport:
    config: BenchConfig
    points: list[BenchPoint] = field(default_factory=list)
    work_exponent: float = float("nan")
    work_residual: float = float("nan")
    time_exponent: float = float("nan")
    time_residual: float = float("nan")

    def as_dict(self) -> dict:
        return {
            "config": asdict(self.config),
            "points": [asdict(p) for p in self.points],
            "work_exponent": self.work_exponent,
            "work_residual": self.work_residual,
            "time_exponent": self.time_exponent,
            "time_residual": self.time_residual,
        }

    def to_text(self) -> str:
        lines = ["n m m_closure wall_time work_counter"]
        lines += [f"{p.n} {p.m} {p.m_closure} {p.wall_time!r} {p.work_counter}" for p in self.points]
        lines.append(f"work_exponent {self.work_exponent!r} residual {self.work_residual!r}")
        lines.append(f"time_exponent {self.time_exponent!r} residual {self.time_residual!r}")
        return "\n".join(lines)

    def save(self, directory) -> Path:
        out = Path(directory)
        out.mkdir(parents=True, exist_ok=True)
        stem = out / f"closure_{self.config.family}"
        with open(stem.with_suffix(".csv"), "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["n", "m", "m_closure", "wall_time", "work_counter"])
            for p in self.points:
                w.writerow([p.n, p.m, p.m_closure, p.wall_time, p.work_counter])
        stem.with_suffix(".json").write_text(json.dumps(self.as_dict(), indent=2))
        return stem


def _random_dag(rng, n: int, p: float) -> list[tuple[int, int]]:
    if n < 2:
        return []
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < p
    return list(zip(iu[keep].tolist(), ju[keep].tolist()))


def make_dag(family: str, n: int, rng: np.random.Generator, density: float = 0.05, block: int = BLOCK) -> DirectedGraph:
    if family == "sparse":
        edges = []
        for start in range(0, n, block):
            size = min(block, n - start)
            edges += [(start + a, start + b) for a, b in _random_dag(rng, size, 0.3)]
    elif family == "dense":
        edges = _random_dag(rng, n, density)
    elif family == "constant":
        edges = [(v, v + 1) for v in range(0, n - 1, 2)]
    else:
        raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")
    perm = rng.permutation(n).tolist()
    return DirectedGraph.from_edges(n, [(perm[a], perm[b]) for a, b in edges])


def fit_exponent(ns: Sequence[float], ys: Sequence[float]) -> tuple[float, float]:
    """Least-squares slope on log2-log2 axes and the RMS residual."""
    x = np.log2(np.asarray(ns, dtype=float))
    y = np.log2(np.maximum(np.asarray(ys, dtype=float), 1e-12))
    if len(x) < 2:
        return float("nan"), float("nan")
    slope, icpt = np.polyfit(x, y, 1)
    resid = y - (slope * x + icpt)
    return float(slope), float(np.sqrt(np.mean(resid**2)))


def bench_closure(config: BenchConfig, out_dir: Optional[str] = None) -> BenchReport:
    rng = np.random.Generator(np.random.PCG64(config.seed))
    report = BenchReport(config)
    for n in config.sizes:
        g = make_dag(config.family, n, rng, config.density, config.block)
        best = float("inf")
        result = None
        for _ in range(max(1, config.repeats)):
            t0 = time.perf_counter()
            result = gk_closure(g)
            best = min(best, time.perf_counter() - t0)
        report.points.append(BenchPoint(n, g.edge_count, result.closure_edges, best, result.work_counter))
    ns = [p.n for p in report.points]
    report.work_exponent, report.work_residual = fit_exponent(ns, [max(1, p.work_counter) for p in report.points])
    report.time_exponent, report.time_residual = fit_exponent(ns, [p.wall_time for p in report.points])
    if out_dir is not None:
        report.save(out_dir)
    return report
