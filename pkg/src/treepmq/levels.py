"""Flattened layered-oracle structure over a Boruvka tree.

An oracle is a tree of *levels*.  A level covers a band of the Boruvka tree
(the top level covers all of it) and is either

* a *basic* level: per-node tables of path minima to every ancestor plus the
  node's rank in each ancestor's subtree ordered by those minima.  Queries
  read two ranks (integers) and one table cell: zero weight comparisons; or
* a *layered* level: boundary depths from the Ackermann threshold schedule,
  per-node minima to the ancestors at each boundary depth ``s_j`` and at
  ``s_j - 1``, and one child level per layer (the forest of truncated
  subtrees strictly between consecutive boundaries), built with step k-1.

A query walks down: the LCA depth picks either a boundary (answered from the
two stored minima, at most one comparison) or a layer, which contributes the
two side segments (at most two comparisons) and recurses on the boundary
ancestors inside the layer.  Each descent step costs at most 2 comparisons
and the bottom basic level costs none, so step-k queries stay within 2k.

Everything is stored in flat arrays (level-indexed bases) so the whole query
runs in one compiled kernel with no Python objects.
"""
from __future__ import annotations

import numpy as np

from ._accel import njit
from .ackermann import thresholds
from .boruvka import BoruvkaTree
from .lca import build_lca, children_csr, lca_kernel
from .staircase import _stair_query, build_staircases_forest
from .tree import NONE_WEIGHT

KIND_BASIC = 0
KIND_LAYERED = 1


@njit
def _localize(gids, gdepth, gpar, gpw, glob2loc, doff, dloc, lpar, pwl):
    n = gids.shape[0]
    h = 1
    for i in range(n):
        glob2loc[gids[i]] = i
    for i in range(n):
        g = gids[i]
        d = gdepth[g] - doff
        dloc[i] = d
        if d > h:
            h = d
        pwl[i] = gpw[g]
        lpar[i] = glob2loc[gpar[g]] if d > 1 else -1
    return h

DEFAULT_MIN_BASIC_SIZE = 64


@njit
def _fill_basic_tables(n, h, dloc, lpar, pwl, coff, cchild, bmin, brank, buf_prev, buf_cur, mrg_a, mrg_b, slice_start, slice_len):
    # Minima to every ancestor depth, rows derived from the parent's row.
    for i in range(n):
        d = dloc[i]
        base = i * h
        for dd in range(h):
            bmin[base + dd] = NONE_WEIGHT
        if d > 1:
            p = lpar[i]
            w = pwl[i]
            pbase = p * h
            for dd in range(1, d):
                pm = bmin[pbase + dd - 1]
                if pm == NONE_WEIGHT or w < pm:
                    bmin[base + dd - 1] = w
                else:
                    bmin[base + dd - 1] = pm

    # Bottom-up merge of subtree orders; rank = position in the ancestor's
    # sorted list (ties by local node id; the ancestor itself sorts last).
    n_at = np.zeros(h + 2, dtype=np.int64)
    for i in range(n):
        n_at[dloc[i]] += 1
    by_depth = np.empty(n, dtype=np.int32)
    start_at = np.zeros(h + 2, dtype=np.int64)
    for d in range(1, h + 1):
        start_at[d + 1] = start_at[d] + n_at[d]
    fill = start_at.copy()
    for i in range(n):
        by_depth[fill[dloc[i]]] = i
        fill[dloc[i]] += 1

    tail = 0
    for t in range(start_at[h], start_at[h + 1]):
        u = by_depth[t]
        buf_prev[tail] = u
        slice_start[u] = tail
        slice_len[u] = 1
        brank[u * h + h - 1] = 0
        tail += 1

    for d in range(h - 1, 0, -1):
        tail = 0
        for t in range(start_at[d], start_at[d + 1]):
            u = by_depth[t]
            acc = 0
            for cj in range(coff[u], coff[u + 1]):
                c = cchild[cj]
                cs = slice_start[c]
                cl = slice_len[c]
                ia = 0
                ib = 0
                k = 0
                while ia < acc and ib < cl:
                    xa = mrg_a[ia]
                    xb = buf_prev[cs + ib]
                    va = bmin[xa * h + d - 1]
                    vb = bmin[xb * h + d - 1]
                    if va < vb or (va == vb and xa < xb):
                        mrg_b[k] = xa
                        ia += 1
                    else:
                        mrg_b[k] = xb
                        ib += 1
                    k += 1
                while ia < acc:
                    mrg_b[k] = mrg_a[ia]
                    ia += 1
                    k += 1
                while ib < cl:
                    mrg_b[k] = buf_prev[cs + ib]
                    ib += 1
                    k += 1
                acc = k
                tmp = mrg_a
                mrg_a = mrg_b
                mrg_b = tmp
            s0 = tail
            for p in range(acc):
                x = mrg_a[p]
                buf_cur[tail] = x
                brank[x * h + d - 1] = p
                tail += 1
            buf_cur[tail] = u
            brank[u * h + d - 1] = acc
            tail += 1
            slice_start[u] = s0
            slice_len[u] = acc + 1
        tmp2 = buf_prev
        buf_prev = buf_cur
        buf_cur = tmp2


@njit
def _fill_boundary_tables(n, m, dloc, lpar, pwl, bounds, laylocal, minw, minw1, anc1):
    # Nodes arrive parents-first (lpar[i] < i), so rows chain from the parent.
    for i in range(n):
        d = dloc[i]
        base = i * m
        for j in range(m):
            s = bounds[j]
            if d > s:
                p = lpar[i]
                if dloc[p] == s:
                    minw[base + j] = pwl[i]
                else:
                    pm = minw[p * m + j]
                    minw[base + j] = pwl[i] if pwl[i] < pm else pm
            else:
                minw[base + j] = NONE_WEIGHT
            if d >= s and s >= 2:
                p = lpar[i]
                if d == s:
                    minw1[base + j] = pwl[i]
                    anc1[base + j] = laylocal[p]
                else:
                    pm1 = minw1[p * m + j]
                    minw1[base + j] = pwl[i] if pwl[i] < pm1 else pm1
                    anc1[base + j] = anc1[p * m + j]
            else:
                minw1[base + j] = NONE_WEIGHT
                anc1[base + j] = -1


@njit
def _fill_boundary_tables_stair(
    n, m, dloc, lpar, bounds, laylocal, skey, swv, sleft, sright, svroot, minw, minw1, anc1
):
    # Same contract as the direct fill, but minima come from the per-node
    # persistent staircases; only the ancestor ids chain through parents.
    for i in range(n):
        d = dloc[i]
        base = i * m
        for j in range(m):
            s = bounds[j]
            if d > s:
                minw[base + j] = _stair_query(skey, swv, sleft, sright, svroot[i], s)
            else:
                minw[base + j] = NONE_WEIGHT
            if d >= s and s >= 2:
                p = lpar[i]
                minw1[base + j] = _stair_query(skey, swv, sleft, sright, svroot[i], s - 1)
                if d == s:
                    anc1[base + j] = laylocal[p]
                else:
                    anc1[base + j] = anc1[p * m + j]
            else:
                minw1[base + j] = NONE_WEIGHT
                anc1[base + j] = -1


@njit
def _query_kernel(
    ut,
    vt,
    gdepth,
    euler,
    edep,
    first,
    table,
    logt,
    block,
    lv_kind,
    lv_nbase,
    lv_doff,
    lv_h,
    lv_m,
    lv_bbase,
    lv_tbase,
    lv_sbase,
    nd_gid,
    nd_lay,
    bd_s,
    bd_child,
    tb_minw,
    tb_minw1,
    tb_anc1,
    bs_min,
    bs_rank,
):
    ans = NONE_WEIGHT
    cnt = 0
    lvl = 0
    u = ut
    v = vt
    while True:
        if u == v:
            break
        nb = lv_nbase[lvl]
        gu = nd_gid[nb + u]
        gv = nd_gid[nb + v]
        l = lca_kernel(euler, edep, first, table, logt, block, gu, gv)
        dl = gdepth[l] - lv_doff[lvl]
        if lv_kind[lvl] == KIND_BASIC:
            h = lv_h[lvl]
            sb = lv_sbase[lvl]
            ru = bs_rank[sb + u * h + dl - 1]
            rv = bs_rank[sb + v * h + dl - 1]
            w = u if ru < rv else v
            val = bs_min[sb + w * h + dl - 1]
            if val != NONE_WEIGHT:
                if ans == NONE_WEIGHT:
                    ans = val
                else:
                    cnt += 1
                    if val < ans:
                        ans = val
            break
        m = lv_m[lvl]
        bb = lv_bbase[lvl]
        j = 0
        while bd_s[bb + j] < dl:
            j += 1
        s = bd_s[bb + j]
        tb = lv_tbase[lvl]
        if s == dl:
            a = tb_minw[tb + u * m + j]
            b = tb_minw[tb + v * m + j]
            if a != NONE_WEIGHT:
                if ans == NONE_WEIGHT:
                    ans = a
                else:
                    cnt += 1
                    if a < ans:
                        ans = a
            if b != NONE_WEIGHT:
                if ans == NONE_WEIGHT:
                    ans = b
                else:
                    cnt += 1
                    if b < ans:
                        ans = b
            break
        # Layer j: side segments down to the boundary ancestors, then recurse.
        du = gdepth[gu] - lv_doff[lvl]
        dv = gdepth[gv] - lv_doff[lvl]
        if du > s - 1:
            a = tb_minw1[tb + u * m + j]
            if a != NONE_WEIGHT:
                if ans == NONE_WEIGHT:
                    ans = a
                else:
                    cnt += 1
                    if a < ans:
                        ans = a
            nu = tb_anc1[tb + u * m + j]
        else:
            nu = nd_lay[nb + u]
        if dv > s - 1:
            b = tb_minw1[tb + v * m + j]
            if b != NONE_WEIGHT:
                if ans == NONE_WEIGHT:
                    ans = b
                else:
                    cnt += 1
                    if b < ans:
                        ans = b
            nv = tb_anc1[tb + v * m + j]
        else:
            nv = nd_lay[nb + v]
        child = bd_child[bb + j]
        if child < 0:
            break
        u = nu
        v = nv
        lvl = child
    return ans, cnt


@njit
def _query_many_kernel(
    us,
    vs,
    leaf_of,
    n_top,
    gdepth,
    euler,
    edep,
    first,
    table,
    logt,
    block,
    lv_kind,
    lv_nbase,
    lv_doff,
    lv_h,
    lv_m,
    lv_bbase,
    lv_tbase,
    lv_sbase,
    nd_gid,
    nd_lay,
    bd_s,
    bd_child,
    tb_minw,
    tb_minw1,
    tb_anc1,
    bs_min,
    bs_rank,
    out_ans,
    out_cnt,
):
    for i in range(us.shape[0]):
        ut = n_top - 1 - leaf_of[us[i]]
        vt = n_top - 1 - leaf_of[vs[i]]
        a, c = _query_kernel(
            ut,
            vt,
            gdepth,
            euler,
            edep,
            first,
            table,
            logt,
            block,
            lv_kind,
            lv_nbase,
            lv_doff,
            lv_h,
            lv_m,
            lv_bbase,
            lv_tbase,
            lv_sbase,
            nd_gid,
            nd_lay,
            bd_s,
            bd_child,
            tb_minw,
            tb_minw1,
            tb_anc1,
            bs_min,
            bs_rank,
        )
        out_ans[i] = a
        out_cnt[i] = c


@njit
def _check_all_pairs_kernel(
    n0,
    brute,
    leaf_of,
    n_top,
    gdepth,
    euler,
    edep,
    first,
    table,
    logt,
    block,
    lv_kind,
    lv_nbase,
    lv_doff,
    lv_h,
    lv_m,
    lv_bbase,
    lv_tbase,
    lv_sbase,
    nd_gid,
    nd_lay,
    bd_s,
    bd_child,
    tb_minw,
    tb_minw1,
    tb_anc1,
    bs_min,
    bs_rank,
):
    mism = 0
    maxc = 0
    for x in range(n0):
        for y in range(n0):
            ut = n_top - 1 - leaf_of[x]
            vt = n_top - 1 - leaf_of[y]
            a, c = _query_kernel(
                ut,
                vt,
                gdepth,
                euler,
                edep,
                first,
                table,
                logt,
                block,
                lv_kind,
                lv_nbase,
                lv_doff,
                lv_h,
                lv_m,
                lv_bbase,
                lv_tbase,
                lv_sbase,
                nd_gid,
                nd_lay,
                bd_s,
                bd_child,
                tb_minw,
                tb_minw1,
                tb_anc1,
                bs_min,
                bs_rank,
            )
            if a != brute[x, y]:
                mism += 1
            if c > maxc:
                maxc = c
    return mism, maxc


class _LevelMeta:
    __slots__ = ("kind", "n", "doff", "h", "m", "nbase", "bbase", "tbase", "sbase", "k")

    def __init__(self, kind, n, doff, h, m, nbase, bbase, tbase, sbase, k):
        self.kind = kind
        self.n = n
        self.doff = doff
        self.h = h
        self.m = m
        self.nbase = nbase
        self.bbase = bbase
        self.tbase = tbase
        self.sbase = sbase
        self.k = k


class _FlatBuilder:
    def __init__(self, b: BoruvkaTree, strategy: str, min_basic_size: int):
        self.b = b
        self.gdepth = b.rooted.depth
        self.gpar = b.rooted.parent
        self.gpw = b.rooted.parent_weight
        self.strategy = strategy
        self.min_basic_size = min_basic_size
        self.glob2loc = np.empty(b.size, dtype=np.int32)
        self.levels: list[_LevelMeta] = []
        self.nd_gid: list[np.ndarray] = []
        self.nd_lay: list[np.ndarray] = []
        self.bd_s: list[np.ndarray] = []
        self.bd_child: list[np.ndarray] = []
        self.tb_minw: list[np.ndarray] = []
        self.tb_minw1: list[np.ndarray] = []
        self.tb_anc1: list[np.ndarray] = []
        self.bs_min: list[np.ndarray] = []
        self.bs_rank: list[np.ndarray] = []
        self.nd_total = 0
        self.bd_total = 0
        self.tb_total = 0
        self.bs_total = 0

    def build_level(self, gids: np.ndarray, doff: int, k: int) -> int:
        """gids in descending id order (parents precede children)."""
        n = len(gids)
        dloc = np.empty(n, dtype=np.int32)
        lpar = np.empty(n, dtype=np.int32)
        pwl = np.empty(n, dtype=np.int64)
        h = int(
            _localize(gids, self.gdepth, self.gpar, self.gpw, self.glob2loc, doff, dloc, lpar, pwl)
        )

        if k <= 0 or h <= 2 or n < self.min_basic_size:
            return self._add_basic(gids, dloc, lpar, pwl, doff, h, k)
        return self._add_layered(gids, dloc, lpar, pwl, doff, h, k)

    def _add_basic(self, gids, dloc, lpar, pwl, doff, h, k) -> int:
        n = len(gids)
        if h == 1:
            # Single-depth band: every node is alone in its subtree, so all
            # minima are empty and all ranks zero.
            bmin = np.full(n, NONE_WEIGHT, dtype=np.int64)
            brank = np.zeros(n, dtype=np.int32)
            lid = len(self.levels)
            self.levels.append(
                _LevelMeta(KIND_BASIC, n, doff, h, 0, self.nd_total, self.bd_total, self.tb_total, self.bs_total, k)
            )
            self.nd_gid.append(gids.astype(np.int32))
            self.nd_lay.append(np.full(n, -1, dtype=np.int32))
            self.bs_min.append(bmin)
            self.bs_rank.append(brank)
            self.nd_total += n
            self.bs_total += n
            return lid
        coff, cchild = children_csr(lpar, n)
        bmin = np.empty(n * h, dtype=np.int64)
        brank = np.zeros(n * h, dtype=np.int32)
        buf_prev = np.empty(n, dtype=np.int32)
        buf_cur = np.empty(n, dtype=np.int32)
        mrg_a = np.empty(n, dtype=np.int32)
        mrg_b = np.empty(n, dtype=np.int32)
        sstart = np.empty(n, dtype=np.int64)
        slen = np.empty(n, dtype=np.int64)
        _fill_basic_tables(
            n, h, dloc, lpar, pwl, coff, cchild, bmin, brank, buf_prev, buf_cur, mrg_a, mrg_b, sstart, slen
        )
        lid = len(self.levels)
        self.levels.append(
            _LevelMeta(KIND_BASIC, n, doff, h, 0, self.nd_total, self.bd_total, self.tb_total, self.bs_total, k)
        )
        self.nd_gid.append(gids.astype(np.int32))
        self.nd_lay.append(np.full(n, -1, dtype=np.int32))
        self.bs_min.append(bmin)
        self.bs_rank.append(brank)
        self.nd_total += n
        self.bs_total += n * h
        return lid

    def _add_layered(self, gids, dloc, lpar, pwl, doff, h, k) -> int:
        n = len(gids)
        sched = thresholds(k, h)
        bounds = np.array(sched.boundaries, dtype=np.int32)
        m = len(bounds)

        # Layer membership and within-layer local ids (order-preserving).
        laylocal = np.full(n, -1, dtype=np.int32)
        layer_members: list[np.ndarray] = []
        lo = 0
        for j in range(m):
            hi = int(bounds[j])
            mask = (dloc > lo) & (dloc < hi)
            idx = np.nonzero(mask)[0]
            laylocal[idx] = np.arange(len(idx), dtype=np.int32)
            layer_members.append(idx)
            lo = hi

        minw = np.empty(n * m, dtype=np.int64)
        minw1 = np.empty(n * m, dtype=np.int64)
        anc1 = np.empty(n * m, dtype=np.int32)
        if self.strategy == "persistent":
            roots = np.nonzero(dloc == 1)[0].astype(np.int32)
            stairs = build_staircases_forest(n, lpar, pwl, dloc, roots)
            _fill_boundary_tables_stair(
                n,
                m,
                dloc,
                lpar,
                bounds,
                laylocal,
                stairs.key,
                stairs.weight,
                stairs.left,
                stairs.right,
                stairs.vroot,
                minw,
                minw1,
                anc1,
            )
        else:
            _fill_boundary_tables(n, m, dloc, lpar, pwl, bounds, laylocal, minw, minw1, anc1)

        lid = len(self.levels)
        self.levels.append(
            _LevelMeta(KIND_LAYERED, n, doff, h, m, self.nd_total, self.bd_total, self.tb_total, self.bs_total, k)
        )
        child_ids = np.full(m, -1, dtype=np.int32)
        self.nd_gid.append(gids.astype(np.int32))
        self.nd_lay.append(laylocal)
        self.bd_s.append(bounds)
        self.bd_child.append(child_ids)
        self.tb_minw.append(minw)
        self.tb_minw1.append(minw1)
        self.tb_anc1.append(anc1)
        self.nd_total += n
        self.bd_total += m
        self.tb_total += n * m

        # Children are built after this level's arrays are registered, so the
        # localize scratch can be reused; child ids get patched in place.
        for j in range(m):
            members = layer_members[j]
            if len(members) == 0:
                continue
            child_gids = gids[members]
            child_doff = doff + (0 if j == 0 else int(bounds[j - 1]))
            child_ids[j] = self.build_level(child_gids, child_doff, k - 1)
        return lid

    def finalize(self):
        def cat(parts, dtype):
            if not parts:
                return np.empty(0, dtype=dtype)
            return np.ascontiguousarray(np.concatenate(parts)).astype(dtype, copy=False)

        L = len(self.levels)
        lv_kind = np.array([lv.kind for lv in self.levels], dtype=np.uint8)
        lv_nbase = np.array([lv.nbase for lv in self.levels], dtype=np.int64)
        lv_doff = np.array([lv.doff for lv in self.levels], dtype=np.int64)
        lv_h = np.array([lv.h for lv in self.levels], dtype=np.int64)
        lv_m = np.array([lv.m for lv in self.levels], dtype=np.int64)
        lv_bbase = np.array([lv.bbase for lv in self.levels], dtype=np.int64)
        lv_tbase = np.array([lv.tbase for lv in self.levels], dtype=np.int64)
        lv_sbase = np.array([lv.sbase for lv in self.levels], dtype=np.int64)
        return {
            "lv_kind": lv_kind,
            "lv_nbase": lv_nbase,
            "lv_doff": lv_doff,
            "lv_h": lv_h,
            "lv_m": lv_m,
            "lv_bbase": lv_bbase,
            "lv_tbase": lv_tbase,
            "lv_sbase": lv_sbase,
            "nd_gid": cat(self.nd_gid, np.int32),
            "nd_lay": cat(self.nd_lay, np.int32),
            "bd_s": cat(self.bd_s, np.int32),
            "bd_child": cat(self.bd_child, np.int32),
            "tb_minw": cat(self.tb_minw, np.int64),
            "tb_minw1": cat(self.tb_minw1, np.int64),
            "tb_anc1": cat(self.tb_anc1, np.int32),
            "bs_min": cat(self.bs_min, np.int64),
            "bs_rank": cat(self.bs_rank, np.int32),
            "levels": self.levels,
        }


def build_levels(b: BoruvkaTree, k: int, strategy: str, min_basic_size: int):
    """Build the flat level structure (and its LCA oracle) for a Boruvka tree."""
    if strategy not in ("table", "persistent"):
        raise ValueError(f"unknown strategy {strategy!r}")
    lca = build_lca(b.rooted)
    builder = _FlatBuilder(b, strategy, min_basic_size)
    top = np.arange(b.size - 1, -1, -1, dtype=np.int32)
    builder.build_level(top, 0, k)
    return lca, builder.finalize()
