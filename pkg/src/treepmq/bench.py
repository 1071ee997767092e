"""Benchmark harness producing reproducible CSV rows.

One row per run: the configuration echo followed by measurements.  Non-timing
columns are deterministic for a fixed configuration; timings use the
monotonic clock (build time is the median over repetitions, query time is
total over the query stream divided by its length).

CSV schema (stable)::

    algo,k,n,shape,seed,query_count,c,strategy,build_ms,oracle_bytes,avg_query_ns,max_comparisons,avg_comparisons
"""
from __future__ import annotations

import os
import statistics
import subprocess
import sys
import time
from dataclasses import dataclass

import numpy as np

from .ackermann import alpha
from .boruvka import BalanceParams, build_balanced_boruvka
from .cartesian import CartesianOracle
from .generate import SHAPES, random_tree
from .oracles import brute_query_many, build_basic, build_recursive
from .tree import WeightedTree

ALGOS = ("brute", "cartesian", "basic", "recursive")

CSV_HEADER = (
    "algo,k,n,shape,seed,query_count,c,strategy,"
    "build_ms,oracle_bytes,avg_query_ns,max_comparisons,avg_comparisons"
)


@dataclass(frozen=True)
class BenchConfig:
    algo: str = "recursive"
    k: int | str = 2  # integer step count, or "alpha" for k = alpha(n)
    n: int = 1 << 16
    shape: str = "uniform-random"
    seed: int = 0
    query_count: int = 100_000
    c: int = 4
    strategy: str = "table"

    def validate(self) -> None:
        if self.algo not in ALGOS:
            raise ValueError(f"unknown algo {self.algo!r}; expected one of {ALGOS}")
        if self.shape not in SHAPES:
            raise ValueError(f"unknown shape {self.shape!r}; expected one of {SHAPES}")
        if self.k != "alpha" and (not isinstance(self.k, int) or self.k < 0):
            raise ValueError("k must be a non-negative integer or 'alpha'")
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.query_count < 1:
            raise ValueError("query_count must be at least 1")
        if self.c < 4:
            raise ValueError("c must be at least 4")
        if self.strategy not in ("table", "persistent"):
            raise ValueError(f"unknown strategy {self.strategy!r}")

    def resolved_k(self) -> int:
        return alpha(self.n) if self.k == "alpha" else int(self.k)


@dataclass(frozen=True)
class BenchRow:
    config: BenchConfig
    build_ms: float
    oracle_bytes: int
    avg_query_ns: float
    max_comparisons: int
    avg_comparisons: float

    def csv(self) -> str:
        c = self.config
        return (
            f"{c.algo},{c.k},{c.n},{c.shape},{c.seed},{c.query_count},{c.c},{c.strategy},"
            f"{self.build_ms:.3f},{self.oracle_bytes},{self.avg_query_ns:.1f},"
            f"{self.max_comparisons},{self.avg_comparisons:.4f}"
        )


class _BruteOracle:
    """Baseline with no preprocessing: every query walks the tree."""

    __slots__ = ("tree",)

    def __init__(self, tree: WeightedTree) -> None:
        self.tree = tree

    def query_many(self, us, vs):
        return brute_query_many(self.tree, us, vs)

    @property
    def nbytes(self) -> int:
        return self.tree.eu.nbytes + self.tree.ev.nbytes + self.tree.ew.nbytes


def _build_oracle(cfg: BenchConfig, t: WeightedTree):
    if cfg.algo == "brute":
        return _BruteOracle(t)
    if cfg.algo == "cartesian":
        return CartesianOracle(t)
    if cfg.algo == "basic":
        return build_basic(build_balanced_boruvka(t, BalanceParams(cfg.c)))
    return build_recursive(
        t, k=cfg.resolved_k(), params=BalanceParams(cfg.c), strategy=cfg.strategy
    )


def run_bench(cfg: BenchConfig, build_repeats: int = 5) -> BenchRow:
    """Generate the instance, build the oracle, time a random query stream."""
    cfg.validate()
    t = random_tree(cfg.n, cfg.shape, cfg.seed)

    times = []
    oracle = None
    for _ in range(max(1, build_repeats)):
        t0 = time.perf_counter_ns()
        oracle = _build_oracle(cfg, t)
        times.append(time.perf_counter_ns() - t0)
    build_ms = statistics.median(times) / 1e6

    rng = np.random.default_rng((cfg.seed, 0xBE7C))
    us = rng.integers(0, cfg.n, size=cfg.query_count)
    vs = rng.integers(0, cfg.n, size=cfg.query_count)
    t0 = time.perf_counter_ns()
    _ans, cnt = oracle.query_many(us, vs)
    total = time.perf_counter_ns() - t0

    max_cmp = int(cnt.max())
    if cfg.algo == "recursive":
        budget = 2 * cfg.resolved_k()
        assert max_cmp <= budget, f"comparison budget exceeded: {max_cmp} > {budget}"
    elif cfg.algo in ("basic", "cartesian"):
        assert max_cmp == 0, f"zero-comparison oracle used {max_cmp} comparisons"
    return BenchRow(
        config=cfg,
        build_ms=build_ms,
        oracle_bytes=int(oracle.nbytes),
        avg_query_ns=total / cfg.query_count,
        max_comparisons=max_cmp,
        avg_comparisons=float(cnt.mean()),
    )


def run_bench_subprocess(cfg: BenchConfig, backend: str, build_repeats: int = 5) -> str:
    """Run one bench in a subprocess with the backend pinned via TREEPMQ_NUMBA.

    Returns the CSV row emitted by the child.  Used by --compare-backends.
    """
    env = dict(os.environ)
    env["TREEPMQ_NUMBA"] = "1" if backend == "numba" else "0"
    args = [
        sys.executable,
        "-m",
        "treepmq.cli",
        "bench",
        "--algo",
        cfg.algo,
        "--k",
        str(cfg.k),
        "--n",
        str(cfg.n),
        "--shape",
        cfg.shape,
        "--seed",
        str(cfg.seed),
        "--queries",
        str(cfg.query_count),
        "--c",
        str(cfg.c),
        "--strategy",
        cfg.strategy,
        "--build-repeats",
        str(build_repeats),
        "--no-header",
    ]
    out = subprocess.run(args, env=env, capture_output=True, text=True, check=True)
    return out.stdout.strip().splitlines()[-1]
