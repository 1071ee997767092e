import numpy as np

from treepmq.generate import random_tree
from treepmq.staircase import build_staircases, staircase_query
from treepmq.tree import NONE_WEIGHT, parse_tree, root_at


def test_root_version_empty():
    t = parse_tree("2\n0 1 3\n")
    s = build_staircases(root_at(t, 0))
    assert s.entries(0) == []
    assert staircase_query(s, 1, 1) == 3


def test_pop_rule_example():
    # root -> a (weight 5) -> b (weight 3): the 5-entry is popped, and b's
    # version holds a single entry keyed by the parent depth.
    t = parse_tree("3\n0 1 5\n1 2 3\n")
    s = build_staircases(root_at(t, 0))
    assert s.entries(1) == [(1, 5)]
    assert s.entries(2) == [(2, 3)]
    assert s.query(2, 1) == 3
    assert s.query(2, 2) == 3


def test_monotone_invariant():
    t = random_tree(256, "uniform-random", seed=4)
    s = build_staircases(root_at(t, 0))
    for u in range(t.n):
        e = s.entries(u)
        depths = [d for d, _ in e]
        weights = [w for _, w in e]
        assert depths == sorted(set(depths))
        assert weights == sorted(weights)


def _walk_minima(r, u):
    out = []
    x, m = u, None
    while r.parent[x] != -1:
        w = int(r.parent_weight[x])
        m = w if m is None else min(m, w)
        x = int(r.parent[x])
        out.append((int(r.depth[x]), m))
    return out


def test_queries_match_walks():
    for seed in range(5):
        t = random_tree(256, "uniform-random", seed)
        r = root_at(t, 0)
        s = build_staircases(r)
        for u in range(t.n):
            for d, want in _walk_minima(r, u):
                assert s.query(u, d) == want


def test_out_of_range_depth():
    t = parse_tree("3\n0 1 5\n1 2 3\n")
    s = build_staircases(root_at(t, 0))
    assert s.query(2, 3) == NONE_WEIGHT  # no ancestor at its own depth or deeper


def test_deterministic_build():
    t = random_tree(128, "caterpillar", seed=9)
    a = build_staircases(root_at(t, 0))
    b = build_staircases(root_at(t, 0))
    assert np.array_equal(a.key, b.key)
    assert np.array_equal(a.vroot, b.vroot)
