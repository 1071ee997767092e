"""Constant-ish time LCA: Euler tour plus a sparse table of range-minimum-by-depth.

For small tours the table is the plain O(n log n) sparse table over every tour
position.  Large tours are decomposed into fixed-size blocks first (sparse
table over block minima, short in-block scans at query time) to keep the table
near-linear in memory; answers are identical.  No weight comparisons are
involved anywhere, only integer depths.
"""
from __future__ import annotations

import numpy as np

from ._accel import njit
from .tree import RootedTree, _freeze

_BLOCK_THRESHOLD = 1 << 16
_BLOCK = 32


@njit
def children_csr(parent, order_hint_n):
    # Children grouped by parent, in ascending child id (stable counting sort).
    n = parent.shape[0]
    cnt = np.zeros(n + 1, dtype=np.int32)
    for v in range(n):
        p = parent[v]
        if p >= 0:
            cnt[p + 1] += 1
    for i in range(n):
        cnt[i + 1] += cnt[i]
    child = np.empty(n - 1 if n > 1 else 0, dtype=np.int32)
    pos = cnt[:n].copy()
    for v in range(n):
        p = parent[v]
        if p >= 0:
            child[pos[p]] = v
            pos[p] += 1
    return cnt, child


@njit
def _euler_tour(n, off, child, root, depth):
    # Depth is carried on the stack, so the node-depth array is never
    # gathered at random.
    m = 2 * n - 1
    euler = np.empty(m, dtype=np.int32)
    edep = np.empty(m, dtype=np.int32)
    first = np.full(n, -1, dtype=np.int32)
    stack_node = np.empty(n, dtype=np.int32)
    stack_idx = np.empty(n, dtype=np.int32)
    top = 0
    stack_node[0] = root
    stack_idx[0] = off[root]
    d = depth[root]
    k = 0
    euler[k] = root
    edep[k] = d
    first[root] = 0
    k += 1
    while top >= 0:
        u = stack_node[top]
        i = stack_idx[top]
        if i < off[u + 1]:
            stack_idx[top] = i + 1
            v = child[i]
            top += 1
            stack_node[top] = v
            stack_idx[top] = off[v]
            d += 1
            euler[k] = v
            edep[k] = d
            first[v] = k
            k += 1
        else:
            top -= 1
            d -= 1
            if top >= 0:
                euler[k] = stack_node[top]
                edep[k] = d
                k += 1
    return euler, edep, first


@njit
def _build_table(edep, bs):
    m = edep.shape[0]
    nblk = (m + bs - 1) // bs
    blk = np.empty(nblk, dtype=np.int32)
    for j in range(nblk):
        lo = j * bs
        hi = min(lo + bs, m)
        best = lo
        for i in range(lo + 1, hi):
            if edep[i] < edep[best]:
                best = i
        blk[j] = best
    levels = 1
    while (1 << levels) <= nblk:
        levels += 1
    table = np.empty((levels, nblk), dtype=np.int32)
    table[0, :] = blk
    for lv in range(1, levels):
        span = 1 << lv
        half = span >> 1
        for j in range(nblk - span + 1):
            a = table[lv - 1, j]
            b = table[lv - 1, j + half]
            table[lv, j] = a if edep[a] <= edep[b] else b
    logt = np.zeros(nblk + 1, dtype=np.int32)
    for j in range(2, nblk + 1):
        logt[j] = logt[j >> 1] + 1
    return table, logt


@njit
def lca_kernel(euler, edep, first, table, logt, bs, u, v):
    l = first[u]
    r = first[v]
    if l > r:
        l, r = r, l
    if r - l + 1 <= 2 * bs:
        best = l
        for i in range(l + 1, r + 1):
            if edep[i] < edep[best]:
                best = i
        return euler[best]
    bl = l // bs
    br = r // bs
    best = l
    for i in range(l + 1, (bl + 1) * bs):
        if edep[i] < edep[best]:
            best = i
    for i in range(br * bs, r + 1):
        if edep[i] < edep[best]:
            best = i
    lo, hi = bl + 1, br - 1
    if lo <= hi:
        lv = logt[hi - lo + 1]
        a = table[lv, lo]
        b = table[lv, hi - (1 << lv) + 1]
        mid = a if edep[a] <= edep[b] else b
        if edep[mid] < edep[best]:
            best = mid
    return euler[best]


@njit
def _lca_many(euler, edep, first, table, logt, bs, us, vs, out):
    for i in range(us.shape[0]):
        out[i] = lca_kernel(euler, edep, first, table, logt, bs, us[i], vs[i])


class LcaOracle:
    """LCA queries on a rooted tree after an O(n log n) table build."""

    __slots__ = ("tree", "euler", "edep", "first", "table", "logt", "block")

    def __init__(self, tree: RootedTree) -> None:
        self.tree = tree
        off, child = children_csr(tree.parent, tree.n)
        euler, edep, first = _euler_tour(tree.n, off, child, tree.root, tree.depth)
        self.block = 1 if euler.shape[0] <= _BLOCK_THRESHOLD else _BLOCK
        table, logt = _build_table(edep, self.block)
        self.euler = _freeze(euler)
        self.edep = _freeze(edep)
        self.first = _freeze(first)
        self.table = table
        self.logt = logt

    def lca(self, u: int, v: int) -> int:
        return int(
            lca_kernel(self.euler, self.edep, self.first, self.table, self.logt, self.block, u, v)
        )

    def lca_many(self, us: np.ndarray, vs: np.ndarray) -> np.ndarray:
        out = np.empty(len(us), dtype=np.int32)
        _lca_many(
            self.euler,
            self.edep,
            self.first,
            self.table,
            self.logt,
            self.block,
            np.asarray(us, dtype=np.int64),
            np.asarray(vs, dtype=np.int64),
            out,
        )
        return out

    @property
    def nbytes(self) -> int:
        return (
            self.euler.nbytes
            + self.edep.nbytes
            + self.first.nbytes
            + self.table.nbytes
            + self.logt.nbytes
        )


def build_lca(tree: RootedTree) -> LcaOracle:
    """Build the Euler-tour LCA oracle for a rooted tree."""
    return LcaOracle(tree)
