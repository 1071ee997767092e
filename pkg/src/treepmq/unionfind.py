"""Union-find (disjoint sets) with path compression and union by rank.

Used by the Cartesian-tree builder and the Kruskal reference.  The classic
linear-time-on-trees structure is deliberately not used; at the scales this
package targets, the near-constant inverse-Ackermann amortized cost is
indistinguishable, and no weight comparisons are involved either way.
"""
from __future__ import annotations

import numpy as np


class UnionFind:
    __slots__ = ("parent", "rank")

    def __init__(self, n: int) -> None:
        self.parent = np.arange(n, dtype=np.int64)
        self.rank = np.zeros(n, dtype=np.int8)

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return int(x)

    def union(self, a: int, b: int) -> bool:
        """Join the sets of a and b; returns False if already joined."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True
