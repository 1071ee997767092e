"""Reduced-size invariant battery behind the `selftest` CLI subcommand.

Runs every structural and correctness check at small sizes and prints one
line per section.  Returns a nonzero count of failed sections, which the CLI
turns into the exit code.  The deliberate substitutions (sparse-table LCA,
path-compression union-find) are checked here against naive references.
"""
from __future__ import annotations

import numpy as np

from .ackermann import ackermann, alpha, lambda_row, thresholds
from .boruvka import BalanceParams, BoruvkaTree, build_balanced_boruvka, build_boruvka, check_boruvka_invariants
from .cartesian import CartesianOracle, build_cartesian, check_cartesian_invariants
from .generate import SHAPES, random_connected_graph, random_tree
from .lca import build_lca
from .mstverify import WeightedGraph, kruskal_mst, verify_mst
from .oracles import brute_all_pairs, build_basic, build_recursive
from .staircase import build_staircases
from .tree import NONE_WEIGHT, WeightedTree, edge_to_node, parse_tree, root_at, serialize_tree
from .unionfind import UnionFind


def _boruvka_as_tree(b: BoruvkaTree) -> WeightedTree:
    r = b.rooted
    ids = np.array([v for v in range(b.size) if v != r.root], dtype=np.int32)
    return WeightedTree(b.size, ids, r.parent[ids].astype(np.int32), r.parent_weight[ids].astype(np.int64))


def _naive_lca(parent, u, v):
    anc = set()
    x = u
    while x != -1:
        anc.add(x)
        x = int(parent[x])
    x = v
    while x not in anc:
        x = int(parent[x])
    return x


def run_selftest(emit=print, inject_boundary_bug: bool = False) -> int:
    failures = 0

    def section(name: str, fn) -> None:
        nonlocal failures
        try:
            problem = fn()
        except Exception as exc:  # noqa: BLE001 - selftest reports, never raises
            problem = f"exception: {exc!r}"
        if problem:
            failures += 1
            emit(f"FAIL {name}: {problem}")
        else:
            emit(f"ok   {name}")

    def check_generator():
        for shape in SHAPES:
            for n in (1, 2, 3, 9, 33, 70):
                for seed in (0, 1, 2):
                    t = random_tree(n, shape, seed)
                    back = parse_tree(serialize_tree(t))
                    if back.n != t.n or not np.array_equal(back.ew, t.ew):
                        return f"round-trip broke for {shape} n={n}"
        return None

    def check_ackermann():
        if ackermann(0, 3) != 8 or ackermann(1, 2) != 16:
            return "small values wrong"
        for n in (1, 10, 1000, 10**6):
            if lambda_row(alpha(n), n) != 1:
                return f"lambda(alpha(n), n) != 1 at n={n}"
        if thresholds(1, 16).boundaries != (12, 14, 15):
            return "threshold schedule for (1, 16) wrong"
        return None

    def check_structure():
        for shape in SHAPES:
            for seed in (0, 1, 2, 3):
                t = random_tree(60 + 13 * seed, shape, seed)
                for b, params in (
                    (build_boruvka(t), None),
                    (build_balanced_boruvka(t), BalanceParams()),
                ):
                    rep = check_boruvka_invariants(b, params)
                    if not rep.ok:
                        return f"{shape} seed={seed}: {rep.violations[0]}"
        return None

    def check_preservation():
        for shape in SHAPES:
            for seed in (0, 1):
                t = random_tree(48 + 7 * seed, shape, seed)
                want = brute_all_pairs(t)
                for build in (build_boruvka, build_balanced_boruvka):
                    b = build(t)
                    got = brute_all_pairs(_boruvka_as_tree(b))[np.ix_(b.leaf_of, b.leaf_of)]
                    if not np.array_equal(got, want):
                        return f"path minima differ on {shape} seed={seed} ({build.__name__})"
        return None

    def check_lca():
        for seed in (0, 1, 2):
            t = random_tree(50, "uniform-random", seed)
            r = root_at(t, 0)
            oracle = build_lca(r)
            for u in range(t.n):
                for v in range(t.n):
                    if oracle.lca(u, v) != _naive_lca(r.parent, u, v):
                        return f"lca mismatch at seed={seed} pair=({u},{v})"
        return None

    def check_union_find():
        rng = np.random.default_rng(11)
        for trial in range(5):
            n = 40
            uf = UnionFind(n)
            labels = list(range(n))  # naive reference: relabel on union
            for _ in range(60):
                a, b = int(rng.integers(0, n)), int(rng.integers(0, n))
                la, lb = labels[a], labels[b]
                uf.union(a, b)
                if la != lb:
                    labels = [la if x == lb else x for x in labels]
                for x in range(n):
                    for y in range(n):
                        same = labels[x] == labels[y]
                        if (uf.find(x) == uf.find(y)) != same:
                            return f"union-find disagrees with naive at trial {trial}"
        return None

    def check_staircases():
        for seed in (0, 1):
            t = random_tree(60, "uniform-random", seed)
            r = root_at(t, 0)
            s = build_staircases(r)
            for u in range(t.n):
                walk = []
                x, m = u, None
                while r.parent[x] != -1:
                    w = int(r.parent_weight[x])
                    m = w if m is None else min(m, w)
                    x = int(r.parent[x])
                    walk.append((int(r.depth[x]), m))
                for d, want in walk:
                    if s.query(u, d) != want:
                        return f"staircase query ({u},{d}) wrong at seed={seed}"
        return None

    def check_oracles():
        for shape in SHAPES:
            for seed in (0, 1):
                n = 70 + 9 * seed
                t = random_tree(n, shape, seed)
                brute = brute_all_pairs(t)
                co = CartesianOracle(t)
                ans, cnt = co.query_many(np.repeat(np.arange(n), n), np.tile(np.arange(n), n))
                if not np.array_equal(ans.reshape(n, n), brute):
                    return f"cartesian mismatch {shape} seed={seed}"
                for k in (0, 1, 2):
                    for strategy in ("table", "persistent"):
                        o = build_recursive(t, k, strategy=strategy, min_basic_size=2)
                        if inject_boundary_bug and k >= 1:
                            bt = o.boundary_tables()
                            if bt:
                                _idx, bounds, _minw, _minw1 = bt[0]
                                b2 = np.asarray(bounds)
                                b2.flags.writeable = True
                                b2[0] += 1  # off-by-one boundary depth
                        mism, maxc = o.check_all_pairs(brute)
                        if mism:
                            return (
                                f"boundary violation: {mism} mismatches "
                                f"({shape} seed={seed} k={k} {strategy})"
                            )
                        if maxc > 2 * k:
                            return f"budget exceeded: {maxc} > {2 * k} ({shape} k={k})"
        return None

    def check_strategy_agreement():
        for seed in (0, 1, 2):
            t = random_tree(90, "uniform-random", seed)
            a = build_recursive(t, 2, strategy="table", min_basic_size=2)
            b = build_recursive(t, 2, strategy="persistent", min_basic_size=2)
            for (i1, s1, m1, mm1), (i2, s2, m2, mm2) in zip(a.boundary_tables(), b.boundary_tables()):
                if not (np.array_equal(s1, s2) and np.array_equal(m1, m2) and np.array_equal(mm1, mm2)):
                    return f"strategies disagree at level {i1} seed={seed}"
        return None

    def check_cartesian_structure():
        t = random_tree(64, "uniform-random", 3)
        nt = edge_to_node(t)
        ct = build_cartesian(nt, tie_break_by_id=True)
        bad = check_cartesian_invariants(ct, nt)
        return bad[0] if bad else None

    def check_mst():
        for seed in (0, 1, 2, 3):
            eu, ev, ew = random_connected_graph(40, 120, seed)
            g = WeightedGraph.from_edges(40, eu, ev, ew)
            _idx, mst = kruskal_mst(g)
            rep = verify_mst(g, mst, k=2)
            if not rep.verdict:
                return f"true MST rejected at seed={seed}: {rep.violations[:3]}"
            # Perturb: swap a tree edge for a heavier non-tree edge.
            tree_keys = {(min(u, v), max(u, v)) for u, v, _ in mst.edges()}
            swap = None
            for i in range(g.m):
                key = (min(int(eu[i]), int(ev[i])), max(int(eu[i]), int(ev[i])))
                if key not in tree_keys:
                    swap = i
                    break
            if swap is None:
                continue
            cand = [(int(eu[swap]), int(ev[swap]), int(ew[swap]))]
            uf = UnionFind(40)
            uf.union(cand[0][0], cand[0][1])
            for u, v, w in mst.edges():
                if uf.union(u, v):
                    cand.append((u, v, w))
            bad_tree = WeightedTree.from_edges(40, cand)
            rep2 = verify_mst(g, bad_tree, k=2)
            if rep2.verdict or not rep2.violations:
                return f"perturbed tree accepted at seed={seed}"
        return None

    section("generators and text round-trip", check_generator)
    section("ackermann inverses and schedules", check_ackermann)
    section("contraction-tree structure", check_structure)
    section("path-minimum preservation", check_preservation)
    section("sparse-table lca vs naive walk", check_lca)
    section("union-find vs naive labels", check_union_find)
    section("staircases vs brute walks", check_staircases)
    section("oracle equivalence and budgets", check_oracles)
    section("table/persistent strategy agreement", check_strategy_agreement)
    section("cartesian tree invariants", check_cartesian_structure)
    section("mst verification vs kruskal", check_mst)
    return failures
