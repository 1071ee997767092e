import numpy as np
import pytest

from conftest import naive_lca
from treepmq.cartesian import (
    CartesianOracle,
    build_cartesian,
    cartesian_path_min,
    check_cartesian_invariants,
)
from treepmq.generate import random_tree
from treepmq.lca import build_lca
from treepmq.oracles import brute_all_pairs
from treepmq.tree import NodeWeightedTree, edge_to_node, parse_tree, root_at


def test_cartesian_path_example():
    nt = NodeWeightedTree.from_edges(3, [(0, 1), (1, 2)], [5, 2, 9])
    ct = build_cartesian(nt)
    assert ct.rooted.root == 1
    assert int(ct.rooted.parent[0]) == 1 and int(ct.rooted.parent[2]) == 1


def test_cartesian_star_example():
    nt = NodeWeightedTree.from_edges(5, [(0, i) for i in range(1, 5)], [1, 7, 8, 9, 10])
    ct = build_cartesian(nt)
    assert ct.rooted.root == 0
    assert all(int(ct.rooted.parent[i]) == 0 for i in range(1, 5))


def test_cartesian_rejects_duplicates():
    nt = NodeWeightedTree.from_edges(3, [(0, 1), (1, 2)], [5, 5, 9])
    with pytest.raises(ValueError, match="duplicate"):
        build_cartesian(nt)
    build_cartesian(nt, tie_break_by_id=True)  # tie-break makes it legal


@pytest.mark.parametrize("seed", range(6))
def test_cartesian_validators_random(seed):
    rng = np.random.default_rng(seed)
    base = random_tree(96, "uniform-random", seed)
    nt = NodeWeightedTree.from_edges(
        96, list(zip(map(int, base.eu), map(int, base.ev))), rng.permutation(np.arange(1, 97))
    )
    ct = build_cartesian(nt)
    assert check_cartesian_invariants(ct, nt) == []
    lca = build_lca(ct.rooted)
    # Node-weighted path minima (inclusive) via the LCA weight.
    for u in range(0, 96, 7):
        for v in range(0, 96, 11):
            got = cartesian_path_min(ct, lca, u, v)
            # brute walk over nodes
            adj = [[] for _ in range(96)]
            for i in range(95):
                a, b = int(nt.eu[i]), int(nt.ev[i])
                adj[a].append(b)
                adj[b].append(a)
            prev = {u: -1}
            stack = [u]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in prev:
                        prev[y] = x
                        stack.append(y)
            best = int(nt.nw[v])
            x = v
            while x != u:
                x = prev[x]
                best = min(best, int(nt.nw[x]))
            assert got == best


def test_query_self_node_weighted():
    nt = NodeWeightedTree.from_edges(3, [(0, 1), (1, 2)], [5, 2, 9])
    ct = build_cartesian(nt)
    lca = build_lca(ct.rooted)
    assert cartesian_path_min(ct, lca, 0, 0) == 5


def test_edge_oracle_examples():
    t = parse_tree("3\n0 1 4\n1 2 9\n")
    o = CartesianOracle(t)
    assert o.query(0, 2) == (4, 0)
    assert o.query(1, 2) == (9, 0)
    from treepmq.tree import NONE_WEIGHT

    assert o.query(1, 1) == (NONE_WEIGHT, 0)


@pytest.mark.parametrize("shape", ["path", "star", "uniform-random"])
def test_edge_oracle_equals_brute(shape, all_pairs_cache):
    for seed in range(4):
        t, brute = all_pairs_cache(100, shape, seed)
        o = CartesianOracle(t)
        n = t.n
        ans, cnt = o.query_many(np.repeat(np.arange(n), n), np.tile(np.arange(n), n))
        assert np.array_equal(ans.reshape(n, n), brute)
        assert cnt.max() == 0  # zero weight comparisons at query time


def test_lca_identity_and_small():
    t = parse_tree("2\n0 1 3\n")
    r = root_at(t, 0)
    o = build_lca(r)
    assert o.lca(0, 0) == 0
    assert o.lca(1, 1) == 1
    assert o.lca(0, 1) == 0


@pytest.mark.parametrize("n", [1, 2, 3, 17, 64, 256])
def test_lca_vs_naive_all_pairs(n):
    t = random_tree(n, "uniform-random", seed=n)
    r = root_at(t, 0)
    o = build_lca(r)
    us = np.repeat(np.arange(n), n)
    vs = np.tile(np.arange(n), n)
    got = o.lca_many(us, vs)
    for u, v, l in zip(us, vs, got):
        assert int(l) == naive_lca(r.parent, int(u), int(v))


def test_lca_blocked_table_agrees():
    # Force the blocked layout by monkey level: large tour path tree.
    import treepmq.lca as lca_mod

    t = random_tree(400, "uniform-random", seed=2)
    r = root_at(t, 0)
    plain = build_lca(r)
    orig = lca_mod._BLOCK_THRESHOLD
    try:
        lca_mod._BLOCK_THRESHOLD = 16  # force blocks
        blocked = build_lca(r)
    finally:
        lca_mod._BLOCK_THRESHOLD = orig
    assert blocked.block > 1 and plain.block == 1
    us = np.repeat(np.arange(400), 13)
    vs = np.tile(np.arange(13) * 29 % 400, 400)
    assert np.array_equal(plain.lca_many(us, vs), blocked.lca_many(us, vs))
