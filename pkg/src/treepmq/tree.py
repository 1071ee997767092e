"""Edge- and node-weighted tree data model, validation, reductions and text I/O.

Weights are 64-bit signed integers.  Two sentinels are reserved:

* ``TOP`` (``2**63 - 1``) compares strictly greater than every real weight.
  It is used internally for synthetic split edges in the balanced contraction
  builder and for the original-node weights produced by :func:`edge_to_node`.
* ``NONE_WEIGHT`` (``-2**63``) encodes "no value" (empty path) inside numeric
  arrays.  It never takes part in a weight comparison; the public API
  translates it to ``None``.

Real input weights must lie strictly between the two sentinels.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, TextIO

import numpy as np

from ._accel import njit

TOP: int = np.iinfo(np.int64).max
NONE_WEIGHT: int = np.iinfo(np.int64).min


class TreeFormatError(ValueError):
    """Raised for malformed or invalid tree/graph text input."""


def _freeze(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class WeightedTree:
    """Undirected edge-weighted tree over dense node ids ``0..n-1``.

    Edge ``i`` joins ``eu[i]`` and ``ev[i]`` with weight ``ew[i]``.  Edge ids
    (positions) are the deterministic tie-break everywhere a maximum or
    minimum edge gets selected.
    """

    n: int
    eu: np.ndarray
    ev: np.ndarray
    ew: np.ndarray

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int, int]]) -> "WeightedTree":
        rows = list(edges)
        eu = np.array([r[0] for r in rows], dtype=np.int32)
        ev = np.array([r[1] for r in rows], dtype=np.int32)
        ew = np.array([r[2] for r in rows], dtype=np.int64)
        t = WeightedTree(n, _freeze(eu), _freeze(ev), _freeze(ew))
        validate_tree(t)
        return t

    def edges(self) -> Iterator[tuple[int, int, int]]:
        for i in range(self.n - 1):
            yield int(self.eu[i]), int(self.ev[i]), int(self.ew[i])


@dataclass(frozen=True, eq=False)
class NodeWeightedTree:
    """Unweighted-edge tree whose nodes carry the weights."""

    n: int
    eu: np.ndarray
    ev: np.ndarray
    nw: np.ndarray

    @staticmethod
    def from_edges(
        n: int, edges: Iterable[tuple[int, int]], weights: Iterable[int]
    ) -> "NodeWeightedTree":
        rows = list(edges)
        eu = np.array([r[0] for r in rows], dtype=np.int32)
        ev = np.array([r[1] for r in rows], dtype=np.int32)
        nw = np.array(list(weights), dtype=np.int64)
        t = NodeWeightedTree(n, _freeze(eu), _freeze(ev), _freeze(nw))
        _validate_topology(t.n, t.eu, t.ev)
        if len(t.nw) != n:
            raise TreeFormatError(f"expected {n} node weights, got {len(t.nw)}")
        return t


@dataclass(frozen=True, eq=False)
class RootedTree:
    """Rooted view of a tree: parent pointers, parent-edge weights, depths.

    The root has depth 1, ``parent[root] == -1`` and
    ``parent_weight[root] == NONE_WEIGHT``.
    """

    n: int
    root: int
    parent: np.ndarray
    parent_weight: np.ndarray
    depth: np.ndarray

    @property
    def height(self) -> int:
        return int(self.depth.max())


@njit
def _bfs_root(n, eu, ev, ew, root):
    # CSR adjacency over the undirected edge list, then BFS from the root.
    deg = np.zeros(n + 1, dtype=np.int64)
    for i in range(eu.shape[0]):
        deg[eu[i] + 1] += 1
        deg[ev[i] + 1] += 1
    for i in range(n):
        deg[i + 1] += deg[i]
    adj_node = np.empty(2 * eu.shape[0], dtype=np.int32)
    adj_w = np.empty(2 * eu.shape[0], dtype=np.int64)
    pos = deg[:n].copy()
    for i in range(eu.shape[0]):
        a, b = eu[i], ev[i]
        adj_node[pos[a]] = b
        adj_w[pos[a]] = ew[i]
        pos[a] += 1
        adj_node[pos[b]] = a
        adj_w[pos[b]] = ew[i]
        pos[b] += 1

    parent = np.full(n, -1, dtype=np.int32)
    pweight = np.full(n, NONE_WEIGHT, dtype=np.int64)
    depth = np.zeros(n, dtype=np.int32)
    order = np.empty(n, dtype=np.int32)
    depth[root] = 1
    order[0] = root
    head, tail = 0, 1
    while head < tail:
        u = order[head]
        head += 1
        for j in range(deg[u], deg[u + 1]):
            v = adj_node[j]
            if depth[v] == 0:
                depth[v] = depth[u] + 1
                parent[v] = u
                pweight[v] = adj_w[j]
                order[tail] = v
                tail += 1
    return parent, pweight, depth, tail


def root_at(t: WeightedTree, root: int) -> RootedTree:
    """Root ``t`` at ``root``, computing parents, parent weights and depths."""
    if not 0 <= root < t.n:
        raise TreeFormatError(f"root id {root} out of range [0, {t.n})")
    parent, pweight, depth, reached = _bfs_root(t.n, t.eu, t.ev, t.ew, root)
    assert reached == t.n
    return RootedTree(t.n, root, _freeze(parent), _freeze(pweight), _freeze(depth))


def _validate_topology(n: int, eu: np.ndarray, ev: np.ndarray) -> None:
    if n < 1:
        raise TreeFormatError("node count must be at least 1")
    if len(eu) != n - 1:
        raise TreeFormatError(f"edge count {len(eu)} does not equal n-1 = {n - 1}")
    seen: set[tuple[int, int]] = set()
    # Union-find over the edge list: a failed union means a cycle, and with
    # exactly n-1 edges acyclic is equivalent to connected.
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(len(eu)):
        a, b = int(eu[i]), int(ev[i])
        if not (0 <= a < n and 0 <= b < n):
            raise TreeFormatError(f"edge {i}: node id out of range [0, {n}): ({a}, {b})")
        if a == b:
            raise TreeFormatError(f"edge {i}: self-loop at node {a}")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise TreeFormatError(f"edge {i}: duplicate edge ({a}, {b})")
        seen.add(key)
        ra, rb = find(a), find(b)
        if ra == rb:
            raise TreeFormatError(f"edge {i}: edge ({a}, {b}) closes a cycle")
        parent[ra] = rb


def validate_tree(t: WeightedTree) -> None:
    _validate_topology(t.n, t.eu, t.ev)
    for i in range(t.n - 1):
        w = int(t.ew[i])
        if w >= TOP or w <= NONE_WEIGHT:
            raise TreeFormatError(f"edge {i}: weight {w} out of representable range")


def node_to_edge(t: NodeWeightedTree) -> WeightedTree:
    """Reduce a node-weighted tree to an edge-weighted one.

    Each edge takes the smaller of its two endpoint weights; topology is kept.
    """
    ew = np.minimum(t.nw[t.eu], t.nw[t.ev])
    return WeightedTree(t.n, t.eu, t.ev, _freeze(ew.astype(np.int64)))


def edge_to_node(t: WeightedTree) -> NodeWeightedTree:
    """Reduce an edge-weighted tree to a node-weighted one with dummy nodes.

    Original node ``i`` keeps id ``i`` and gets weight ``TOP``; edge ``j``
    becomes dummy node ``n + j`` carrying the edge weight, joined to both
    endpoints.  The result has ``2n - 1`` nodes.
    """
    n = t.n
    m = n - 1
    nw = np.full(2 * n - 1, TOP, dtype=np.int64)
    nw[n:] = t.ew
    eu = np.empty(2 * m, dtype=np.int32)
    ev = np.empty(2 * m, dtype=np.int32)
    dummies = np.arange(n, n + m, dtype=np.int32)
    eu[0::2] = t.eu
    ev[0::2] = dummies
    eu[1::2] = dummies
    ev[1::2] = t.ev
    return NodeWeightedTree(2 * n - 1, _freeze(eu), _freeze(ev), _freeze(nw))


# ---------------------------------------------------------------------------
# Text formats.
#
#   edge-weighted tree:  line 1 = n, then n-1 lines "u v w"
#   node-weighted tree:  line 1 = n, line 2 = n weights, then n-1 lines "u v"
#   query file:          lines "u v"
# ---------------------------------------------------------------------------


def _data_lines(text: str) -> list[str]:
    return [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]


def _parse_int(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise TreeFormatError(f"malformed {what}: {token!r}") from None


def parse_tree(text: str) -> WeightedTree:
    """Parse the edge-weighted tree text format, validating the result."""
    lines = _data_lines(text)
    if not lines:
        raise TreeFormatError("empty input")
    n = _parse_int(lines[0], "node count")
    if n < 1:
        raise TreeFormatError(f"node count must be at least 1, got {n}")
    body = lines[1:]
    if len(body) != n - 1:
        raise TreeFormatError(f"edge count {len(body)} does not equal n-1 = {n - 1}")
    edges = []
    for i, ln in enumerate(body):
        parts = ln.split()
        if len(parts) != 3:
            raise TreeFormatError(f"edge line {i}: expected 'u v w', got {ln!r}")
        u = _parse_int(parts[0], f"node id on edge line {i}")
        v = _parse_int(parts[1], f"node id on edge line {i}")
        w = _parse_int(parts[2], f"weight on edge line {i}")
        edges.append((u, v, w))
    eu = np.array([e[0] for e in edges], dtype=np.int64)
    ev = np.array([e[1] for e in edges], dtype=np.int64)
    if len(eu) and (eu.min() < 0 or eu.max() >= n or ev.min() < 0 or ev.max() >= n):
        # Re-run the detailed per-edge check for a precise diagnostic.
        _validate_topology(n, eu.astype(np.int32), ev.astype(np.int32))
    t = WeightedTree(
        n,
        _freeze(eu.astype(np.int32)),
        _freeze(ev.astype(np.int32)),
        _freeze(np.array([e[2] for e in edges], dtype=np.int64)),
    )
    validate_tree(t)
    return t


def serialize_tree(t: WeightedTree) -> str:
    out = [str(t.n)]
    out.extend(f"{u} {v} {w}" for u, v, w in t.edges())
    return "\n".join(out) + "\n"


def parse_node_tree(text: str) -> NodeWeightedTree:
    lines = _data_lines(text)
    if not lines:
        raise TreeFormatError("empty input")
    n = _parse_int(lines[0], "node count")
    if n < 1:
        raise TreeFormatError(f"node count must be at least 1, got {n}")
    if len(lines) < 2:
        raise TreeFormatError("missing node-weight line")
    wparts = lines[1].split()
    if len(wparts) != n:
        raise TreeFormatError(f"expected {n} node weights, got {len(wparts)}")
    weights = [_parse_int(p, "node weight") for p in wparts]
    body = lines[2:]
    if len(body) != n - 1:
        raise TreeFormatError(f"edge count {len(body)} does not equal n-1 = {n - 1}")
    edges = []
    for i, ln in enumerate(body):
        parts = ln.split()
        if len(parts) != 2:
            raise TreeFormatError(f"edge line {i}: expected 'u v', got {ln!r}")
        edges.append((_parse_int(parts[0], "node id"), _parse_int(parts[1], "node id")))
    return NodeWeightedTree.from_edges(n, edges, weights)


def serialize_node_tree(t: NodeWeightedTree) -> str:
    out = [str(t.n), " ".join(str(int(w)) for w in t.nw)]
    out.extend(f"{int(t.eu[i])} {int(t.ev[i])}" for i in range(t.n - 1))
    return "\n".join(out) + "\n"


def parse_queries(text: str) -> list[tuple[int, int]]:
    pairs = []
    for i, ln in enumerate(_data_lines(text)):
        parts = ln.split()
        if len(parts) != 2:
            raise TreeFormatError(f"query line {i}: expected 'u v', got {ln!r}")
        pairs.append((_parse_int(parts[0], "query id"), _parse_int(parts[1], "query id")))
    return pairs
