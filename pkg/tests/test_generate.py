import numpy as np
import pytest

from treepmq.generate import SHAPES, random_connected_graph, random_tree
from treepmq.tree import validate_tree


@pytest.mark.parametrize("shape", SHAPES)
def test_shapes_validate(shape):
    for n in (1, 2, 3, 4, 17, 100, 512):
        for seed in (0, 1, 2):
            validate_tree(random_tree(n, shape, seed))


def test_star_shape():
    t = random_tree(5, "star", seed=4)
    assert all(u == 0 for u in t.eu)
    assert sorted(int(v) for v in t.ev) == [1, 2, 3, 4]


def test_path_single_node():
    t = random_tree(1, "path", seed=123)
    assert t.n == 1


def test_determinism():
    a = random_tree(200, "uniform-random", seed=42)
    b = random_tree(200, "uniform-random", seed=42)
    assert np.array_equal(a.eu, b.eu) and np.array_equal(a.ew, b.ew)
    c = random_tree(200, "uniform-random", seed=43)
    assert not np.array_equal(a.ew, c.ew)


def test_prufer_many_seeds():
    for seed in range(1000):
        validate_tree(random_tree(37, "uniform-random", seed))


def test_distinct_weights_default():
    t = random_tree(300, "uniform-random", seed=5)
    assert len(np.unique(t.ew)) == t.n - 1


def test_duplicate_weights_flag():
    t = random_tree(300, "uniform-random", seed=5, duplicate_weights=True)
    assert len(np.unique(t.ew)) < t.n - 1


def test_unknown_shape():
    with pytest.raises(ValueError, match="unknown shape"):
        random_tree(5, "ladder", seed=0)


def test_random_graph():
    eu, ev, ew = random_connected_graph(40, 200, seed=1)
    assert len(eu) == 200
    assert len(np.unique(ew)) == 200  # distinct by default
    seen = set()
    for a, b in zip(eu, ev):
        assert a != b
        key = (min(int(a), int(b)), max(int(a), int(b)))
        assert key not in seen
        seen.add(key)


def test_random_graph_bounds():
    with pytest.raises(ValueError):
        random_connected_graph(10, 8, seed=0)
    with pytest.raises(ValueError):
        random_connected_graph(4, 7, seed=0)
