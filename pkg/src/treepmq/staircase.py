"""Persistent depth -> running-minimum staircases for leaf-to-ancestor queries.

One traversal of a rooted tree maintains, per node ``u``, the monotone map
from ancestor depth ``d`` to the minimum weight on the path from ``u`` up to
its depth-``d`` ancestor.  Entries ``(d_j, w_j)`` have strictly increasing
depths and non-decreasing weights; the answer for depth ``d`` is ``w_j`` of
the entry with the smallest ``d_j >= d``.

Stepping from parent ``p`` to child ``u`` over an edge of weight ``w`` pops
the suffix of entries with weight >= w and appends ``(depth(p), w)``.  The
stack lives in a path-copying treap (one version per node), so each step
costs O(log height) and every version stays queryable.  Queries search by
depth only; no weight comparisons happen at query time.
"""
from __future__ import annotations

import numpy as np

from ._accel import njit
from .lca import children_csr
from .tree import NONE_WEIGHT, RootedTree

_MINSTD = 48271
_MERSENNE31 = 2147483647


@njit
def _stair_build(n, off, child, roots, parent, pw, depth):
    cap = 4 * n + 64
    key = np.empty(cap, dtype=np.int32)
    wv = np.empty(cap, dtype=np.int64)
    left = np.empty(cap, dtype=np.int32)
    right = np.empty(cap, dtype=np.int32)
    prio = np.empty(cap, dtype=np.int64)
    size = 0
    state = 1
    vroot = np.full(n, -1, dtype=np.int32)

    h = 1
    for i in range(n):
        if depth[i] > h:
            h = depth[i]

    stack = np.empty(n + 1, dtype=np.int32)
    for r_i in range(roots.shape[0]):
        r = roots[r_i]
        vroot[r] = -1
        top = 0
        stack[0] = r
        while top >= 0:
            u = stack[top]
            top -= 1
            if u != r:
                p = parent[u]
                w = pw[u]
                if size + 2 * h + 4 > cap:
                    ncap = max(cap * 2, size + 2 * h + 64)
                    k2 = np.empty(ncap, dtype=np.int32)
                    w2 = np.empty(ncap, dtype=np.int64)
                    l2 = np.empty(ncap, dtype=np.int32)
                    r2 = np.empty(ncap, dtype=np.int32)
                    p2 = np.empty(ncap, dtype=np.int64)
                    k2[:size] = key[:size]
                    w2[:size] = wv[:size]
                    l2[:size] = left[:size]
                    r2[:size] = right[:size]
                    p2[:size] = prio[:size]
                    key, wv, left, right, prio, cap = k2, w2, l2, r2, p2, ncap
                # Pop the suffix with weight >= w (path-copying the kept spine).
                res = -1
                last = -1
                t = vroot[p]
                while t != -1:
                    if wv[t] >= w:
                        t = left[t]
                    else:
                        rt = right[t]
                        c = size
                        size += 1
                        key[c] = key[t]
                        wv[c] = wv[t]
                        left[c] = left[t]
                        right[c] = -1
                        prio[c] = prio[t]
                        if last == -1:
                            res = c
                        else:
                            right[last] = c
                        last = c
                        t = rt
                # Fresh max-key node (depth(p), w) with a deterministic priority.
                state = (state * _MINSTD) % _MERSENNE31
                x = size
                size += 1
                key[x] = depth[p]
                wv[x] = w
                left[x] = -1
                right[x] = -1
                prio[x] = state
                # Attach along the right spine by priority (max-heap on prio).
                if res == -1:
                    vroot[u] = x
                else:
                    res2 = -1
                    last2 = -1
                    t = res
                    while t != -1 and prio[t] >= prio[x]:
                        rt = right[t]
                        c = size
                        size += 1
                        key[c] = key[t]
                        wv[c] = wv[t]
                        left[c] = left[t]
                        right[c] = -1
                        prio[c] = prio[t]
                        if last2 == -1:
                            res2 = c
                        else:
                            right[last2] = c
                        last2 = c
                        t = rt
                    left[x] = t
                    if last2 == -1:
                        vroot[u] = x
                    else:
                        right[last2] = x
                        vroot[u] = res2
            # Push children (descending so the smallest id pops first).
            for j in range(off[u + 1] - 1, off[u] - 1, -1):
                top += 1
                stack[top] = child[j]
    return key[:size].copy(), wv[:size].copy(), left[:size].copy(), right[:size].copy(), vroot


@njit
def _stair_query(key, wv, left, right, root, d):
    res = NONE_WEIGHT
    t = root
    while t != -1:
        if key[t] >= d:
            res = wv[t]
            t = left[t]
        else:
            t = right[t]
    return res


class Staircases:
    """All per-node staircase versions of one rooted tree (or forest)."""

    __slots__ = ("n", "key", "weight", "left", "right", "vroot")

    def __init__(self, n, key, weight, left, right, vroot) -> None:
        self.n = n
        self.key = key
        self.weight = weight
        self.left = left
        self.right = right
        self.vroot = vroot

    def query(self, u: int, d: int) -> int:
        """Minimum weight from u up to its depth-d ancestor; NONE_WEIGHT if d
        is not a proper ancestor depth."""
        return int(_stair_query(self.key, self.weight, self.left, self.right, self.vroot[u], d))

    def entries(self, u: int) -> list[tuple[int, int]]:
        """In-order (depth, weight) entries of u's version, for inspection."""
        out: list[tuple[int, int]] = []
        stack: list[int] = []
        t = int(self.vroot[u])
        while stack or t != -1:
            while t != -1:
                stack.append(t)
                t = int(self.left[t])
            t = stack.pop()
            out.append((int(self.key[t]), int(self.weight[t])))
            t = int(self.right[t])
        return out

    @property
    def nbytes(self) -> int:
        return (
            self.key.nbytes
            + self.weight.nbytes
            + self.left.nbytes
            + self.right.nbytes
            + self.vroot.nbytes
        )


def build_staircases(t: RootedTree) -> Staircases:
    """Build every node's staircase version by one traversal from the root."""
    off, child = children_csr(t.parent, t.n)
    roots = np.array([t.root], dtype=np.int32)
    key, wv, left, right, vroot = _stair_build(
        t.n, off, child, roots, t.parent, t.parent_weight, t.depth
    )
    return Staircases(t.n, key, wv, left, right, vroot)


def build_staircases_forest(
    n: int, parent: np.ndarray, pw: np.ndarray, depth: np.ndarray, roots: np.ndarray
) -> Staircases:
    """Forest variant over local arrays (parent -1 at the roots)."""
    off, child = children_csr(parent, n)
    key, wv, left, right, vroot = _stair_build(n, off, child, roots, parent, pw, depth)
    return Staircases(n, key, wv, left, right, vroot)


def staircase_query(s: Staircases, u: int, d: int) -> int:
    """Module-level alias of :meth:`Staircases.query`."""
    return s.query(u, d)
