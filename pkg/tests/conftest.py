import numpy as np
import pytest

from treepmq.tree import WeightedTree


def boruvka_as_tree(b) -> WeightedTree:
    """View a contraction tree's parent edges as a plain weighted tree."""
    r = b.rooted
    ids = np.array([v for v in range(b.size) if v != r.root], dtype=np.int32)
    return WeightedTree(
        b.size, ids, r.parent[ids].astype(np.int32), r.parent_weight[ids].astype(np.int64)
    )


def naive_lca(parent, u, v) -> int:
    anc = set()
    x = u
    while x != -1:
        anc.add(x)
        x = int(parent[x])
    x = v
    while x not in anc:
        x = int(parent[x])
    return x


def path_weights(tree: WeightedTree, u: int, v: int) -> list[int]:
    """Edge weights along the unique u..v path, by direct walk."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(tree.n)]
    for i in range(tree.n - 1):
        a, b, w = int(tree.eu[i]), int(tree.ev[i]), int(tree.ew[i])
        adj[a].append((b, w))
        adj[b].append((a, w))
    prev = {u: (-1, 0)}
    stack = [u]
    while stack:
        x = stack.pop()
        for y, w in adj[x]:
            if y not in prev:
                prev[y] = (x, w)
                stack.append(y)
    out = []
    x = v
    while x != u:
        px, w = prev[x]
        out.append(w)
        x = px
    return out


@pytest.fixture(scope="session")
def all_pairs_cache():
    """Memoized brute all-pairs matrices keyed by (n, shape, seed, dup)."""
    from treepmq.generate import random_tree
    from treepmq.oracles import brute_all_pairs

    cache: dict = {}

    def get(n, shape, seed, duplicate_weights=False):
        key = (n, shape, seed, duplicate_weights)
        if key not in cache:
            t = random_tree(n, shape, seed, duplicate_weights=duplicate_weights)
            cache[key] = (t, brute_all_pairs(t))
        return cache[key]

    return get
