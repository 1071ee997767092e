"""Minimum-spanning-tree verification via online path-maximum queries.

A spanning tree is minimum exactly when no non-tree edge is strictly lighter
than the heaviest edge on the tree path between its endpoints.  The check
builds one layered path-minimum oracle over the tree with negated weights
(max = -min of negations) and tests every non-tree edge against it.

With pairwise-distinct weights a ``True`` verdict means the tree is the
unique MST; with ties it means the tree is *a* minimum spanning tree.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .boruvka import BalanceParams
from .oracles import build_recursive
from .tree import NONE_WEIGHT, TOP, TreeFormatError, WeightedTree, _freeze
from .unionfind import UnionFind


@dataclass(frozen=True, eq=False)
class WeightedGraph:
    """Connected undirected weighted graph; node ids dense in [0, n)."""

    n: int
    eu: np.ndarray
    ev: np.ndarray
    ew: np.ndarray

    @property
    def m(self) -> int:
        return len(self.eu)

    @staticmethod
    def from_edges(n: int, eu, ev, ew) -> "WeightedGraph":
        g = WeightedGraph(
            n,
            _freeze(np.asarray(eu, dtype=np.int32).copy()),
            _freeze(np.asarray(ev, dtype=np.int32).copy()),
            _freeze(np.asarray(ew, dtype=np.int64).copy()),
        )
        validate_graph(g)
        return g


def validate_graph(g: WeightedGraph) -> None:
    if g.n < 1:
        raise TreeFormatError("graph must have at least one node")
    uf = UnionFind(g.n)
    comps = g.n
    for i in range(g.m):
        a, b = int(g.eu[i]), int(g.ev[i])
        if not (0 <= a < g.n and 0 <= b < g.n):
            raise TreeFormatError(f"graph edge {i}: node id out of range: ({a}, {b})")
        if a == b:
            raise TreeFormatError(f"graph edge {i}: self-loop at {a}")
        w = int(g.ew[i])
        if w >= TOP or w <= NONE_WEIGHT:
            raise TreeFormatError(f"graph edge {i}: weight {w} out of range")
        if uf.union(a, b):
            comps -= 1
    if comps != 1:
        raise TreeFormatError(f"graph is disconnected ({comps} components)")


def parse_graph(text: str) -> WeightedGraph:
    """Parse 'n m' header plus m lines of 'u v w'."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise TreeFormatError("empty graph input")
    head = lines[0].split()
    if len(head) != 2:
        raise TreeFormatError(f"graph header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise TreeFormatError(f"malformed graph header {lines[0]!r}") from None
    body = lines[1:]
    if len(body) != m:
        raise TreeFormatError(f"graph edge count {len(body)} does not equal m = {m}")
    eu = np.empty(m, dtype=np.int32)
    ev = np.empty(m, dtype=np.int32)
    ew = np.empty(m, dtype=np.int64)
    for i, ln in enumerate(body):
        parts = ln.split()
        if len(parts) != 3:
            raise TreeFormatError(f"graph edge line {i}: expected 'u v w', got {ln!r}")
        try:
            eu[i], ev[i], ew[i] = int(parts[0]), int(parts[1]), int(parts[2])
        except ValueError:
            raise TreeFormatError(f"graph edge line {i}: malformed value in {ln!r}") from None
    return WeightedGraph.from_edges(n, eu, ev, ew)


def serialize_graph(g: WeightedGraph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{int(g.eu[i])} {int(g.ev[i])} {int(g.ew[i])}" for i in range(g.m))
    return "\n".join(out) + "\n"


def kruskal_mst(g: WeightedGraph) -> tuple[list[int], WeightedTree]:
    """Reference MST: edge indices (ascending weight, ties by index) plus the tree."""
    order = np.lexsort((np.arange(g.m), g.ew))
    uf = UnionFind(g.n)
    picked: list[int] = []
    for i in order:
        i = int(i)
        if uf.union(int(g.eu[i]), int(g.ev[i])):
            picked.append(i)
            if len(picked) == g.n - 1:
                break
    picked.sort()
    t = WeightedTree.from_edges(g.n, [(int(g.eu[i]), int(g.ev[i]), int(g.ew[i])) for i in picked])
    return picked, t


@dataclass(frozen=True)
class VerificationReport:
    """verdict True iff no non-tree edge beats its tree-path maximum."""

    verdict: bool
    violations: tuple[int, ...]  # indices of violating edges in the graph


def verify_mst(
    g: WeightedGraph,
    t: WeightedTree,
    k: int = 2,
    params: BalanceParams = BalanceParams(),
    strategy: str = "table",
) -> VerificationReport:
    """Check that t is a minimum spanning tree of g.

    Raises if t is not a spanning subgraph of g (matching by endpoints and
    weight).  Violations are reported in ascending graph-edge order.
    """
    if t.n != g.n:
        raise ValueError(f"tree spans {t.n} nodes but the graph has {g.n}")
    remaining: dict[tuple[int, int, int], int] = {}
    for i in range(g.m):
        a, b = int(g.eu[i]), int(g.ev[i])
        key = (min(a, b), max(a, b), int(g.ew[i]))
        remaining[key] = remaining.get(key, 0) + 1
    tree_keys = set()
    for u, v, w in t.edges():
        key = (min(u, v), max(u, v), w)
        if remaining.get(key, 0) <= 0:
            raise ValueError(f"tree edge ({u}, {v}, {w}) is not an edge of the graph")
        remaining[key] -= 1
        tree_keys.add(key)

    neg = WeightedTree(t.n, t.eu, t.ev, _freeze(-t.ew.copy()))
    oracle = build_recursive(neg, k=k, params=params, strategy=strategy)

    nontree = []
    for i in range(g.m):
        a, b = int(g.eu[i]), int(g.ev[i])
        key = (min(a, b), max(a, b), int(g.ew[i]))
        if key in tree_keys:
            tree_keys.discard(key)  # first matching copy belongs to the tree
            continue
        nontree.append(i)
    if not nontree:
        return VerificationReport(True, ())
    idx = np.array(nontree, dtype=np.int64)
    ans, _cnt = oracle.query_many(g.eu[idx], g.ev[idx])
    path_max = -ans
    bad = g.ew[idx] < path_max
    violations = tuple(int(i) for i in idx[bad])
    return VerificationReport(len(violations) == 0, violations)
