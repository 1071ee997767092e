import numpy as np
import pytest

from conftest import boruvka_as_tree
from treepmq.boruvka import (
    BalanceParams,
    build_balanced_boruvka,
    build_boruvka,
    check_boruvka_invariants,
)
from treepmq.generate import SHAPES, random_tree
from treepmq.oracles import brute_all_pairs
from treepmq.tree import TOP, parse_tree


def test_single_edge_both_builders():
    t = parse_tree("2\n0 1 5\n")
    for build in (build_boruvka, build_balanced_boruvka):
        b = build(t)
        assert b.size == 3 and b.height == 2
        assert int(b.rooted.parent_weight[0]) == 5
        assert int(b.rooted.parent_weight[1]) == 5


def test_path_marks_by_hand():
    # 0-1 weight 4, 1-2 weight 9: node 0 marks 4, nodes 1 and 2 mark 9;
    # everything shrinks in one round.
    t = parse_tree("3\n0 1 4\n1 2 9\n")
    b = build_boruvka(t)
    assert b.size == 4 and b.height == 2
    assert [int(b.rooted.parent_weight[i]) for i in range(3)] == [4, 9, 9]


def test_single_node():
    b = build_boruvka(parse_tree("1\n"))
    assert b.size == 1 and b.height == 1 and b.rooted.root == 0


def test_star_splits_before_round_one():
    t = random_tree(11, "star", seed=3)
    b = build_balanced_boruvka(t, BalanceParams(4))
    # The degree-10 center must split, leaving extra leaves behind.
    assert b.n_leaves > t.n
    nchild = np.bincount(b.rooted.parent[b.rooted.parent >= 0], minlength=b.size)
    assert nchild[b.n_leaves:].max() <= 5
    assert check_boruvka_invariants(b, BalanceParams(4)).ok


@pytest.mark.parametrize("shape", SHAPES)
def test_invariants_random(shape):
    params = BalanceParams(4)
    for seed in range(12):
        n = 3 + (seed * 37) % 180
        t = random_tree(n, shape, seed)
        assert check_boruvka_invariants(build_boruvka(t)).ok
        assert check_boruvka_invariants(build_balanced_boruvka(t, params), params).ok


def test_invariant_checker_flags_bad_tree():
    t = random_tree(30, "uniform-random", 0)
    b = build_boruvka(t)
    r = b.rooted
    # Hand-build a violation: give some internal node a single child by
    # re-parenting everything else away from it.
    parent = r.parent.copy()
    parent.flags.writeable = True
    victim = b.n_leaves  # first hypernode
    kids = [v for v in range(b.size) if parent[v] == victim]
    for v in kids[1:]:
        parent[v] = r.root
    broken = type(r)(r.n, r.root, parent, r.parent_weight, r.depth)
    rep = check_boruvka_invariants(
        type(b)(
            rooted=broken,
            leaf_of=b.leaf_of,
            n_original=b.n_original,
            n_leaves=b.n_leaves,
            round_of=b.round_of,
            rounds_log=b.rounds_log,
            repair_stats=b.repair_stats,
            balanced=False,
            c=None,
        )
    )
    assert any("children" in v for v in rep.violations)


@pytest.mark.parametrize("shape", SHAPES)
def test_path_min_preservation(shape):
    # Path minima between leaves of the contraction tree equal path minima
    # in the source tree, both builders, all pairs.
    for seed in range(6):
        n = 4 + (seed * 29) % 124
        t = random_tree(n, shape, seed)
        want = brute_all_pairs(t)
        for build in (build_boruvka, build_balanced_boruvka):
            b = build(t)
            got = brute_all_pairs(boruvka_as_tree(b))[np.ix_(b.leaf_of, b.leaf_of)]
            assert np.array_equal(got, want), (shape, seed, build.__name__)


def test_depth_count_bound_explicit():
    # count(depth <= k) <= size / 2^(h-k); at k = h-1 that is half the tree.
    t = random_tree(200, "uniform-random", 8)
    b = build_balanced_boruvka(t)
    h = b.height
    counts = np.bincount(b.rooted.depth, minlength=h + 1)
    cum = counts.cumsum()
    assert cum[h - 1] * 2 <= b.size
    for k in range(1, h + 1):
        assert cum[k] * (1 << (h - k)) <= b.size


def test_shrink_factor_and_size():
    params = BalanceParams(4)
    for seed in range(8):
        t = random_tree(777, "uniform-random", seed)
        b = build_balanced_boruvka(t, params)
        for pre, _post, after in b.rounds_log:
            assert int(after) * (2 * params.c - 4) <= (params.c - 1) * int(pre)
        assert b.size <= 4 * t.n
        assert b.height <= int(np.ceil(np.log2(t.n))) + 1


def test_balance_params_validation():
    with pytest.raises(ValueError):
        BalanceParams(3)
    assert BalanceParams(4).shrink_factor == 0.75


def test_top_join_edges_never_surface():
    # Split edges carry TOP, but real queries never see TOP as an answer.
    t = random_tree(60, "star", 2)
    b = build_balanced_boruvka(t)
    sub = brute_all_pairs(boruvka_as_tree(b))[np.ix_(b.leaf_of, b.leaf_of)]
    off = ~np.eye(t.n, dtype=bool)
    assert sub[off].max() < TOP
