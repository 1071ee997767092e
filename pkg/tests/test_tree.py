import numpy as np
import pytest

from treepmq.generate import random_tree
from treepmq.oracles import brute_all_pairs, brute_query
from treepmq.tree import (
    NONE_WEIGHT,
    TOP,
    NodeWeightedTree,
    TreeFormatError,
    edge_to_node,
    node_to_edge,
    parse_node_tree,
    parse_tree,
    root_at,
    serialize_node_tree,
    serialize_tree,
)


def test_parse_smallest_tree():
    t = parse_tree("2\n0 1 7\n")
    assert t.n == 2
    assert list(t.edges()) == [(0, 1, 7)]


def test_parse_single_node():
    t = parse_tree("1\n")
    assert t.n == 1
    assert list(t.edges()) == []


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("3\n0 1 4\n0 2 4\n0 1 9\n", "edge count"),
        ("3\n0 1 4\n", "edge count"),
        ("2\n0 1\n", "expected 'u v w'"),
        ("2\n0 x 5\n", "malformed"),
        ("3\n0 1 4\n0 1 9\n", "duplicate edge"),
        ("3\n0 1 4\n1 1 9\n", "self-loop"),
        ("3\n0 1 4\n0 3 9\n", "out of range"),
        ("4\n0 1 4\n1 2 2\n0 2 9\n", "cycle"),
        ("", "empty"),
        ("0\n", "at least 1"),
    ],
)
def test_parse_diagnostics(text, fragment):
    with pytest.raises(TreeFormatError, match=fragment):
        parse_tree(text)


def test_weight_range_rejected():
    with pytest.raises(TreeFormatError, match="out of representable range"):
        parse_tree(f"2\n0 1 {TOP}\n")


@pytest.mark.parametrize("shape", ["path", "star", "caterpillar", "balanced", "uniform-random"])
@pytest.mark.parametrize("n", [1, 2, 5, 33, 128])
def test_serialize_round_trip(shape, n):
    t = random_tree(n, shape, seed=7)
    back = parse_tree(serialize_tree(t))
    assert back.n == t.n
    assert np.array_equal(back.eu, t.eu)
    assert np.array_equal(back.ev, t.ev)
    assert np.array_equal(back.ew, t.ew)


def test_node_tree_round_trip():
    nt = NodeWeightedTree.from_edges(3, [(0, 1), (1, 2)], [5, 2, 9])
    back = parse_node_tree(serialize_node_tree(nt))
    assert np.array_equal(back.nw, nt.nw)
    assert np.array_equal(back.eu, nt.eu)


def test_node_to_edge_path():
    nt = NodeWeightedTree.from_edges(3, [(0, 1), (1, 2)], [5, 2, 9])
    t = node_to_edge(nt)
    assert list(t.edges()) == [(0, 1, 2), (1, 2, 2)]


def test_node_to_edge_star():
    nt = NodeWeightedTree.from_edges(5, [(0, i) for i in range(1, 5)], [1, 8, 8, 8, 8])
    t = node_to_edge(nt)
    assert all(w == 1 for _, _, w in t.edges())


def test_edge_to_node_single_edge():
    t = parse_tree("2\n0 1 7\n")
    nt = edge_to_node(t)
    assert nt.n == 3
    assert int(nt.nw[0]) == TOP and int(nt.nw[1]) == TOP and int(nt.nw[2]) == 7
    pairs = {(int(nt.eu[i]), int(nt.ev[i])) for i in range(2)}
    assert pairs == {(0, 2), (2, 1)}


def test_edge_to_node_single_node():
    t = parse_tree("1\n")
    nt = edge_to_node(t)
    assert nt.n == 1 and int(nt.nw[0]) == TOP


def _node_brute_min(nt: NodeWeightedTree, u: int, v: int) -> int:
    # Inclusive-of-endpoints minimum node weight on the u..v path.
    adj = [[] for _ in range(nt.n)]
    for i in range(nt.n - 1):
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
    return best


def test_edge_to_node_preserves_path_minima():
    t = random_tree(64, "uniform-random", seed=11)
    nt = edge_to_node(t)
    brute = brute_all_pairs(t)
    for u in range(0, t.n, 7):
        for v in range(0, t.n, 5):
            if u == v:
                continue
            assert _node_brute_min(nt, u, v) == brute[u, v]


def test_node_to_edge_matches_interior_node_minima():
    # Node-path minima over interior nodes equal edge-path minima after the
    # reduction, for paths with at least one interior node.
    rng = np.random.default_rng(0)
    nt = NodeWeightedTree.from_edges(
        64,
        [(int(a), int(b)) for a, b in zip(random_tree(64, "uniform-random", 3).eu,
                                          random_tree(64, "uniform-random", 3).ev)],
        rng.permutation(np.arange(1, 65)),
    )
    t = node_to_edge(nt)
    brute = brute_all_pairs(t)
    adj = [[] for _ in range(nt.n)]
    for i in range(nt.n - 1):
        a, b = int(nt.eu[i]), int(nt.ev[i])
        adj[a].append(b)
        adj[b].append(a)
    for u in range(0, 64, 9):
        for v in range(0, 64, 11):
            if u == v:
                continue
            prev = {u: -1}
            stack = [u]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in prev:
                        prev[y] = x
                        stack.append(y)
            interior = []
            x = prev[v]
            while x != u and x != -1:
                interior.append(int(nt.nw[x]))
                x = prev[x]
            want = min(interior + [min(int(nt.nw[u]), int(nt.nw[v]))])
            assert want == brute[u, v]


def test_root_at_single_edge():
    t = parse_tree("2\n0 1 7\n")
    r = root_at(t, 0)
    assert r.depth[0] == 1 and r.depth[1] == 2
    assert r.parent[1] == 0 and r.parent_weight[1] == 7
    assert r.parent[0] == -1 and r.parent_weight[0] == NONE_WEIGHT


def test_root_at_path_depths():
    t = random_tree(4, "path", seed=0)
    r = root_at(t, 0)
    assert list(r.depth) == [1, 2, 3, 4]


def test_root_at_depth_sum():
    t = random_tree(100, "uniform-random", seed=9)
    r = root_at(t, 17)
    total = sum(int(r.depth[v]) - int(r.depth[r.parent[v]]) for v in range(t.n) if v != 17)
    assert total == t.n - 1


def test_brute_query_examples():
    t = parse_tree("2\n0 1 7\n")
    out = brute_query(t, 0, 1)
    assert out.answer == 7 and out.comparisons == 0
    t2 = parse_tree("3\n0 1 4\n1 2 9\n")
    out = brute_query(t2, 0, 2)
    assert out.answer == 4 and out.comparisons == 1
    same = brute_query(t2, 1, 1)
    assert same.answer is None and same.comparisons == 0
