"""Deterministic random generators for trees and connected graphs.

Everything is keyed by ``(n, shape, seed)`` via numpy's ``default_rng``, so
fixed arguments reproduce instances bit-for-bit.  Weights are a random
permutation of ``1..n-1`` (pairwise distinct) unless ``duplicate_weights``
is set, in which case they are drawn from a deliberately small range.
"""
from __future__ import annotations

import numpy as np

from ._accel import njit
from .tree import WeightedTree, _freeze

SHAPES = ("path", "star", "caterpillar", "balanced", "uniform-random")


@njit
def _prufer_decode(seq, n):
    # Standard decode; returns parent-ish edge endpoints (u[i], v[i]).
    deg = np.ones(n, dtype=np.int64)
    for i in range(seq.shape[0]):
        deg[seq[i]] += 1
    eu = np.empty(n - 1, dtype=np.int32)
    ev = np.empty(n - 1, dtype=np.int32)
    # ptr scans for the smallest leaf; leaf is the current smallest.
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for i in range(seq.shape[0]):
        v = seq[i]
        eu[i] = leaf
        ev[i] = v
        deg[v] -= 1
        if deg[v] == 1 and v < ptr:
            leaf = v
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    eu[n - 2] = leaf
    ev[n - 2] = n - 1
    return eu, ev


def _shape_edges(n: int, shape: str, rng: np.random.Generator):
    if shape == "path":
        eu = np.arange(n - 1, dtype=np.int32)
        ev = eu + 1
    elif shape == "star":
        eu = np.zeros(n - 1, dtype=np.int32)
        ev = np.arange(1, n, dtype=np.int32)
    elif shape == "caterpillar":
        # Spine of ceil(n/2) nodes, legs attached round-robin along it.
        spine = (n + 1) // 2
        eu = np.empty(n - 1, dtype=np.int32)
        ev = np.empty(n - 1, dtype=np.int32)
        for i in range(spine - 1):
            eu[i], ev[i] = i, i + 1
        for j, leg in enumerate(range(spine, n)):
            eu[spine - 1 + j] = j % spine
            ev[spine - 1 + j] = leg
    elif shape == "balanced":
        # Complete binary shape via heap indexing.
        ev = np.arange(1, n, dtype=np.int32)
        eu = (ev - 1) // 2
    elif shape == "uniform-random":
        if n <= 2:
            eu = np.arange(n - 1, dtype=np.int32)
            ev = eu + 1
        else:
            seq = rng.integers(0, n, size=n - 2).astype(np.int64)
            eu, ev = _prufer_decode(seq, n)
    else:
        raise ValueError(f"unknown shape {shape!r}; expected one of {SHAPES}")
    return eu, ev


def random_tree(
    n: int,
    shape: str = "uniform-random",
    seed: int = 0,
    duplicate_weights: bool = False,
) -> WeightedTree:
    """Generate a weighted tree with the given shape, deterministic in the seed."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = np.random.default_rng(seed)
    eu, ev = _shape_edges(n, shape, rng)
    if duplicate_weights:
        hi = max(2, (n - 1) // 4 + 1)
        ew = rng.integers(1, hi + 1, size=n - 1).astype(np.int64)
    else:
        ew = rng.permutation(np.arange(1, n, dtype=np.int64))
    return WeightedTree(n, _freeze(eu), _freeze(ev), _freeze(ew.astype(np.int64)))


def random_connected_graph(
    n: int,
    m: int,
    seed: int = 0,
    duplicate_weights: bool = False,
):
    """Random connected graph: a uniform spanning tree plus m-(n-1) extra edges.

    Returns ``(eu, ev, ew)`` arrays; weights are a permutation of ``1..m``
    unless duplicates are requested.  Extra edges avoid self-loops and
    parallel edges.
    """
    if m < n - 1:
        raise ValueError("m must be at least n-1 for a connected graph")
    max_m = n * (n - 1) // 2
    if m > max_m:
        raise ValueError(f"m={m} exceeds simple-graph maximum {max_m}")
    rng = np.random.default_rng(seed)
    teu, tev = _shape_edges(n, "uniform-random", rng)
    seen = {(min(int(a), int(b)), max(int(a), int(b))) for a, b in zip(teu, tev)}
    eu = list(map(int, teu))
    ev = list(map(int, tev))
    while len(eu) < m:
        a, b = int(rng.integers(0, n)), int(rng.integers(0, n))
        if a == b:
            continue
        key = (min(a, b), max(a, b))
        if key in seen:
            continue
        seen.add(key)
        eu.append(a)
        ev.append(b)
    if duplicate_weights:
        hi = max(2, m // 4 + 1)
        ew = rng.integers(1, hi + 1, size=m).astype(np.int64)
    else:
        ew = rng.permutation(np.arange(1, m + 1, dtype=np.int64))
    return (
        np.array(eu, dtype=np.int32),
        np.array(ev, dtype=np.int32),
        ew.astype(np.int64),
    )
