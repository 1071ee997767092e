"""Path-minimum oracle family: brute force, basic (zero comparisons), layered.

Each oracle answers ``query(u, v)`` with the minimum edge weight on the u..v
path of the source tree and the number of weight comparisons the query spent.
``u == v`` yields an empty path: answer ``None``, zero comparisons.
"""
from __future__ import annotations

import os
import sys
from dataclasses import dataclass

import numpy as np

from ._accel import njit
from .boruvka import BalanceParams, BoruvkaTree, build_balanced_boruvka
from .lca import lca_kernel
from .levels import (
    DEFAULT_MIN_BASIC_SIZE,
    KIND_BASIC,
    _check_all_pairs_kernel,
    _query_kernel,
    _query_many_kernel,
    build_levels,
)
from .meter import ComparisonCounter, fold_min
from .tree import NONE_WEIGHT, WeightedTree


@dataclass(frozen=True)
class QueryOutcome:
    """Answer plus the number of weight comparisons the query consumed."""

    answer: int | None
    comparisons: int


def _outcome(raw: int, cnt: int) -> QueryOutcome:
    return QueryOutcome(None if raw == NONE_WEIGHT else int(raw), int(cnt))


def brute_query(t: WeightedTree, u: int, v: int) -> QueryOutcome:
    """Reference oracle: walk the unique u..v path and fold the weights."""
    if not (0 <= u < t.n and 0 <= v < t.n):
        raise IndexError(f"query ids ({u}, {v}) out of range [0, {t.n})")
    if u == v:
        return QueryOutcome(None, 0)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(t.n)]
    for i in range(t.n - 1):
        a, b, w = int(t.eu[i]), int(t.ev[i]), int(t.ew[i])
        adj[a].append((b, w))
        adj[b].append((a, w))
    parent = {u: (-1, 0)}
    stack = [u]
    while stack:
        x = stack.pop()
        if x == v:
            break
        for y, w in adj[x]:
            if y not in parent:
                parent[y] = (x, w)
                stack.append(y)
    weights = []
    x = v
    while x != u:
        px, w = parent[x]
        weights.append(w)
        x = px
    counter = ComparisonCounter()
    ans = fold_min(counter, weights)
    return _outcome(ans, counter.count)


@njit
def _brute_all_pairs_kernel(n, eu, ev, ew):
    deg = np.zeros(n + 1, dtype=np.int64)
    for i in range(eu.shape[0]):
        deg[eu[i] + 1] += 1
        deg[ev[i] + 1] += 1
    for i in range(n):
        deg[i + 1] += deg[i]
    adj = np.empty(2 * eu.shape[0], dtype=np.int32)
    adw = np.empty(2 * eu.shape[0], dtype=np.int64)
    pos = deg[:n].copy()
    for i in range(eu.shape[0]):
        a, b = eu[i], ev[i]
        adj[pos[a]] = b
        adw[pos[a]] = ew[i]
        pos[a] += 1
        adj[pos[b]] = a
        adw[pos[b]] = ew[i]
        pos[b] += 1
    out = np.full((n, n), NONE_WEIGHT, dtype=np.int64)
    queue = np.empty(n, dtype=np.int32)
    seen = np.zeros(n, dtype=np.uint8)
    for s in range(n):
        seen[:] = 0
        seen[s] = 1
        queue[0] = s
        qt = 1
        qh = 0
        while qh < qt:
            x = queue[qh]
            qh += 1
            mx = out[s, x]
            for j in range(deg[x], deg[x + 1]):
                y = adj[j]
                if seen[y] == 0:
                    seen[y] = 1
                    w = adw[j]
                    if x == s or w < mx:
                        out[s, y] = w
                    else:
                        out[s, y] = mx
                    queue[qt] = y
                    qt += 1
    return out


def brute_all_pairs(t: WeightedTree) -> np.ndarray:
    """All-pairs path minima (NONE_WEIGHT on the diagonal); the test oracle."""
    return _brute_all_pairs_kernel(t.n, t.eu, t.ev, t.ew)


@njit
def _brute_many_kernel(n, eu, ev, ew, us, vs, out_ans, out_cnt):
    deg = np.zeros(n + 1, dtype=np.int64)
    for i in range(eu.shape[0]):
        deg[eu[i] + 1] += 1
        deg[ev[i] + 1] += 1
    for i in range(n):
        deg[i + 1] += deg[i]
    adj = np.empty(2 * eu.shape[0], dtype=np.int32)
    adw = np.empty(2 * eu.shape[0], dtype=np.int64)
    pos = deg[:n].copy()
    for i in range(eu.shape[0]):
        a, b = eu[i], ev[i]
        adj[pos[a]] = b
        adw[pos[a]] = ew[i]
        pos[a] += 1
        adj[pos[b]] = a
        adw[pos[b]] = ew[i]
        pos[b] += 1
    best = np.empty(n, dtype=np.int64)
    hops = np.empty(n, dtype=np.int64)
    seen = np.zeros(n, dtype=np.uint8)
    queue = np.empty(n, dtype=np.int32)
    for q in range(us.shape[0]):
        s = us[q]
        tgt = vs[q]
        if s == tgt:
            out_ans[q] = NONE_WEIGHT
            out_cnt[q] = 0
            continue
        seen[:] = 0
        seen[s] = 1
        queue[0] = s
        hops[s] = 0
        qh, qt = 0, 1
        while qh < qt:
            x = queue[qh]
            qh += 1
            if x == tgt:
                break
            for j in range(deg[x], deg[x + 1]):
                y = adj[j]
                if seen[y] == 0:
                    seen[y] = 1
                    w = adw[j]
                    if x == s:
                        best[y] = w
                    else:
                        best[y] = w if w < best[x] else best[x]
                    hops[y] = hops[x] + 1
                    queue[qt] = y
                    qt += 1
        out_ans[q] = best[tgt]
        out_cnt[q] = hops[tgt] - 1


def brute_query_many(t: WeightedTree, us, vs) -> tuple[np.ndarray, np.ndarray]:
    """Batch brute-force queries; comparison counts follow the walk-and-fold rule."""
    us = np.asarray(us, dtype=np.int64)
    vs = np.asarray(vs, dtype=np.int64)
    out_ans = np.empty(len(us), dtype=np.int64)
    out_cnt = np.empty(len(us), dtype=np.int32)
    _brute_many_kernel(t.n, t.eu, t.ev, t.ew, us, vs, out_ans, out_cnt)
    return out_ans, out_cnt


class PathMinOracle:
    """Layered (or plain basic) path-minimum oracle over a Boruvka tree.

    ``k = 0`` is the basic zero-comparison oracle; ``k >= 1`` layers the tree
    by the step-k threshold schedule and answers within 2k comparisons.
    """

    def __init__(
        self,
        boruvka: BoruvkaTree,
        k: int,
        strategy: str = "table",
        min_basic_size: int = DEFAULT_MIN_BASIC_SIZE,
    ) -> None:
        if k < 0:
            raise ValueError("k must be >= 0")
        self.boruvka = boruvka
        self.k = k
        self.strategy = strategy
        self.lca, self.tables = build_levels(boruvka, k, strategy, min_basic_size)
        t = self.tables
        self._n_top = boruvka.size
        self._args = (
            boruvka.rooted.depth,
            self.lca.euler,
            self.lca.edep,
            self.lca.first,
            self.lca.table,
            self.lca.logt,
            self.lca.block,
            t["lv_kind"],
            t["lv_nbase"],
            t["lv_doff"],
            t["lv_h"],
            t["lv_m"],
            t["lv_bbase"],
            t["lv_tbase"],
            t["lv_sbase"],
            t["nd_gid"],
            t["nd_lay"],
            t["bd_s"],
            t["bd_child"],
            t["tb_minw"],
            t["tb_minw1"],
            t["tb_anc1"],
            t["bs_min"],
            t["bs_rank"],
        )

    @property
    def n(self) -> int:
        return self.boruvka.n_original

    def _top_local(self, u0: int) -> int:
        return self._n_top - 1 - int(self.boruvka.leaf_of[u0])

    def query(self, u: int, v: int) -> QueryOutcome:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise IndexError(f"query ids ({u}, {v}) out of range [0, {self.n})")
        if u == v:
            return QueryOutcome(None, 0)
        if _TRACE:
            ans, cnt = self._query_py(u, v, emit=lambda s: print(s, file=sys.stderr))
        else:
            ans, cnt = _query_kernel(self._top_local(u), self._top_local(v), *self._args)
        out = _outcome(ans, cnt)
        assert out.comparisons <= max(2 * self.k, 0), "comparison budget exceeded"
        return out

    def query_many(self, us, vs) -> tuple[np.ndarray, np.ndarray]:
        us = np.asarray(us, dtype=np.int64)
        vs = np.asarray(vs, dtype=np.int64)
        out_ans = np.empty(len(us), dtype=np.int64)
        out_cnt = np.empty(len(us), dtype=np.int32)
        _query_many_kernel(
            us, vs, self.boruvka.leaf_of, self._n_top, *self._args, out_ans, out_cnt
        )
        return out_ans, out_cnt

    def check_all_pairs(self, brute: np.ndarray) -> tuple[int, int]:
        """(mismatch count vs the brute matrix, max comparisons over all pairs)."""
        return _check_all_pairs_kernel(
            self.n, brute, self.boruvka.leaf_of, self._n_top, *self._args
        )

    def boundary_tables(self):
        """Per layered level: (level index, boundaries, minw, minw1) views."""
        t = self.tables
        out = []
        for idx, lv in enumerate(t["levels"]):
            if lv.m == 0:
                continue
            bounds = t["bd_s"][lv.bbase : lv.bbase + lv.m]
            minw = t["tb_minw"][lv.tbase : lv.tbase + lv.n * lv.m].reshape(lv.n, lv.m)
            minw1 = t["tb_minw1"][lv.tbase : lv.tbase + lv.n * lv.m].reshape(lv.n, lv.m)
            out.append((idx, bounds, minw, minw1))
        return out

    @property
    def nbytes(self) -> int:
        t = self.tables
        total = self.lca.nbytes
        total += self.boruvka.rooted.parent.nbytes
        total += self.boruvka.rooted.parent_weight.nbytes
        total += self.boruvka.rooted.depth.nbytes
        total += self.boruvka.leaf_of.nbytes
        for key in (
            "lv_kind",
            "lv_nbase",
            "lv_doff",
            "lv_h",
            "lv_m",
            "lv_bbase",
            "lv_tbase",
            "lv_sbase",
            "nd_gid",
            "nd_lay",
            "bd_s",
            "bd_child",
            "tb_minw",
            "tb_minw1",
            "tb_anc1",
            "bs_min",
            "bs_rank",
        ):
            total += t[key].nbytes
        return total

    # -- slow Python mirror of the query kernel, used for per-level tracing --

    def _query_py(self, u0: int, v0: int, emit=None):
        t = self.tables
        meta = t["levels"]
        depth = self.boruvka.rooted.depth
        counter = ComparisonCounter()
        segs: list[int] = []
        u = self._top_local(u0)
        v = self._top_local(v0)
        lvl = 0
        ans = NONE_WEIGHT
        while True:
            if u == v:
                break
            lv = meta[lvl]
            gu = int(t["nd_gid"][lv.nbase + u])
            gv = int(t["nd_gid"][lv.nbase + v])
            l = self.lca.lca(gu, gv)
            dl = int(depth[l]) - lv.doff
            if lv.kind == KIND_BASIC:
                ru = t["bs_rank"][lv.sbase + u * lv.h + dl - 1]
                rv = t["bs_rank"][lv.sbase + v * lv.h + dl - 1]
                w = u if ru < rv else v
                segs.append(int(t["bs_min"][lv.sbase + w * lv.h + dl - 1]))
                if emit:
                    emit(f"level {lvl} basic: lca depth {dl}, segment {segs[-1]}")
                break
            j = 0
            while t["bd_s"][lv.bbase + j] < dl:
                j += 1
            s = int(t["bd_s"][lv.bbase + j])
            if s == dl:
                a = int(t["tb_minw"][lv.tbase + u * lv.m + j])
                b = int(t["tb_minw"][lv.tbase + v * lv.m + j])
                segs.extend((a, b))
                if emit:
                    emit(f"level {lvl} boundary s={s}: segments {a}, {b}")
                break
            du = int(depth[gu]) - lv.doff
            dv = int(depth[gv]) - lv.doff
            if du > s - 1:
                segs.append(int(t["tb_minw1"][lv.tbase + u * lv.m + j]))
                nu = int(t["tb_anc1"][lv.tbase + u * lv.m + j])
            else:
                nu = int(t["nd_lay"][lv.nbase + u])
            if dv > s - 1:
                segs.append(int(t["tb_minw1"][lv.tbase + v * lv.m + j]))
                nv = int(t["tb_anc1"][lv.tbase + v * lv.m + j])
            else:
                nv = int(t["nd_lay"][lv.nbase + v])
            if emit:
                emit(f"level {lvl} layer {j} (s={s}): sides {segs[-2:]}, descend")
            child = int(t["bd_child"][lv.bbase + j])
            if child < 0:
                break
            u, v, lvl = nu, nv, child
        ans = fold_min(counter, segs)
        if emit:
            emit(f"answer {ans} comparisons {counter.count}")
        return ans, counter.count


_TRACE = bool(os.environ.get("TREEPMQ_TRACE"))


def build_basic(b: BoruvkaTree, min_basic_size: int = DEFAULT_MIN_BASIC_SIZE) -> PathMinOracle:
    """Zero-comparison oracle: ancestor-minima and rank tables over all of b."""
    return PathMinOracle(b, k=0, strategy="table", min_basic_size=min_basic_size)


def build_recursive(
    t: WeightedTree,
    k: int,
    params: BalanceParams = BalanceParams(),
    strategy: str = "table",
    min_basic_size: int = DEFAULT_MIN_BASIC_SIZE,
) -> PathMinOracle:
    """Step-k layered oracle on the balanced Boruvka tree of t (2k comparisons)."""
    b = build_balanced_boruvka(t, params)
    return PathMinOracle(b, k=k, strategy=strategy, min_basic_size=min_basic_size)
