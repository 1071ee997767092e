"""Cartesian trees for node-weighted trees, and the zero-comparison baseline oracle.

The Cartesian tree of a node-weighted tree is heap-ordered by weight, has a
bijective node correspondence, and every subtree induces a connected subgraph
of the source tree.  The node of minimum weight on the path between u and v is
exactly their lowest common ancestor there, so path-minimum queries need no
weight comparisons at query time at all: the sorting happens up front.

Construction processes nodes in increasing weight order, attaching the
Cartesian roots of already-processed neighbor components via union-find.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._accel import njit
from .lca import LcaOracle, build_lca
from .tree import NONE_WEIGHT, NodeWeightedTree, RootedTree, WeightedTree, _freeze, edge_to_node


@njit
def _build_kernel(n, eu, ev, order):
    # order = nodes by decreasing weight; each node adopts the current
    # Cartesian roots of its already-processed neighbor components, so the
    # lightest node (processed last) ends up as the overall root.
    # CSR adjacency.
    deg = np.zeros(n + 1, dtype=np.int64)
    for i in range(eu.shape[0]):
        deg[eu[i] + 1] += 1
        deg[ev[i] + 1] += 1
    for i in range(n):
        deg[i + 1] += deg[i]
    adj = np.empty(2 * eu.shape[0], dtype=np.int32)
    pos = deg[:n].copy()
    for i in range(eu.shape[0]):
        a, b = eu[i], ev[i]
        adj[pos[a]] = b
        pos[a] += 1
        adj[pos[b]] = a
        pos[b] += 1

    uf = np.arange(n, dtype=np.int64)
    top = np.arange(n, dtype=np.int32)  # current Cartesian root per component
    done = np.zeros(n, dtype=np.uint8)
    parent = np.full(n, -1, dtype=np.int32)

    for t in range(n):
        v = order[t]
        for j in range(deg[v], deg[v + 1]):
            u = adj[j]
            if done[u] == 0:
                continue
            r = u
            while uf[r] != r:
                uf[r] = uf[uf[r]]
                r = uf[r]
            if r == v:
                continue
            parent[top[r]] = v
            uf[r] = v
        done[v] = 1
    return parent


@dataclass(frozen=True, eq=False)
class CartesianTree:
    rooted: RootedTree
    node_weights: np.ndarray


def build_cartesian(t: NodeWeightedTree, tie_break_by_id: bool = False) -> CartesianTree:
    """Build the Cartesian tree; unique when node weights are pairwise distinct.

    With ``tie_break_by_id`` set, equal weights are ordered by node id, which
    yields a valid (if non-unique) heap-ordered tree; otherwise duplicate
    weights are rejected.
    """
    if not tie_break_by_id:
        if len(np.unique(t.nw)) != t.n:
            raise ValueError("duplicate node weights; pass tie_break_by_id=True")
    order = np.lexsort((np.arange(t.n, dtype=np.int64), t.nw))[::-1].astype(np.int64)
    parent = _build_kernel(t.n, t.eu, t.ev, np.ascontiguousarray(order))
    root = int(order[-1])
    depth = np.zeros(t.n, dtype=np.int32)
    depth[root] = 1
    for idx in range(t.n - 2, -1, -1):
        v = order[idx]
        depth[v] = depth[parent[v]] + 1
    pweight = np.full(t.n, NONE_WEIGHT, dtype=np.int64)
    mask = parent >= 0
    pweight[mask] = t.nw[parent[mask]]
    rooted = RootedTree(t.n, root, _freeze(parent), _freeze(pweight), _freeze(depth))
    return CartesianTree(rooted, t.nw)


def cartesian_path_min(c: CartesianTree, l: LcaOracle, u: int, v: int) -> int:
    """Minimum node weight on the u..v path (endpoints inclusive): the LCA weight."""
    return int(c.node_weights[l.lca(u, v)])


def check_cartesian_invariants(c: CartesianTree, source: NodeWeightedTree) -> list[str]:
    """Validate heap order and subtree connectivity; returns violation strings."""
    out: list[str] = []
    par = c.rooted.parent
    for v in range(c.rooted.n):
        p = par[v]
        if p >= 0 and c.node_weights[p] > c.node_weights[v]:
            out.append(f"heap violation at node {v}: parent {p} is heavier")
    # Subtree connectivity in the source tree, checked per node.
    kids: list[list[int]] = [[] for _ in range(c.rooted.n)]
    for v in range(c.rooted.n):
        if par[v] >= 0:
            kids[par[v]].append(v)
    adj: list[set[int]] = [set() for _ in range(source.n)]
    for i in range(source.n - 1):
        a, b = int(source.eu[i]), int(source.ev[i])
        adj[a].add(b)
        adj[b].add(a)

    def subtree(v: int) -> set[int]:
        seen = set()
        stack = [v]
        while stack:
            x = stack.pop()
            seen.add(x)
            stack.extend(kids[x])
        return seen

    for v in range(c.rooted.n):
        nodes = subtree(v)
        # BFS inside the induced subgraph.
        it = iter(nodes)
        start = next(it)
        reach = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in nodes and y not in reach:
                    reach.add(y)
                    stack.append(y)
        if reach != nodes:
            out.append(f"subtree of {v} not connected in the source tree")
    return out


class CartesianOracle:
    """Edge-weighted path-minimum baseline: Cartesian tree of the dummy-node
    reduction plus an LCA oracle.  Queries consume zero weight comparisons."""

    __slots__ = ("n", "cartesian", "lca")

    def __init__(self, t: WeightedTree) -> None:
        self.n = t.n
        nt = edge_to_node(t)
        # Original nodes all carry TOP, so ties are broken by id; dummy-node
        # weights are the (distinct or not) edge weights.
        self.cartesian = build_cartesian(nt, tie_break_by_id=True)
        self.lca = build_lca(self.cartesian.rooted)

    def query(self, u: int, v: int) -> tuple[int, int]:
        """Returns (answer, comparisons); NONE_WEIGHT for u == v."""
        if u == v:
            return NONE_WEIGHT, 0
        return cartesian_path_min(self.cartesian, self.lca, u, v), 0

    def query_many(self, us: np.ndarray, vs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        ls = self.lca.lca_many(us, vs)
        ans = self.cartesian.node_weights[ls].astype(np.int64)
        ans[np.asarray(us) == np.asarray(vs)] = NONE_WEIGHT
        return ans, np.zeros(len(ans), dtype=np.int32)

    @property
    def nbytes(self) -> int:
        return (
            self.cartesian.rooted.parent.nbytes
            + self.cartesian.rooted.depth.nbytes
            + self.cartesian.node_weights.nbytes
            + self.lca.nbytes
        )
