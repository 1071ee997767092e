"""Boruvka trees: the contraction hierarchy of max-edge marking rounds.

Each round, every current node marks its maximum-weight incident edge (ties
broken by smallest edge id) and the connected components formed by marked
edges shrink into hypernodes.  A node's parent edge in the Boruvka tree
carries the weight of the edge that node marked.  Leaves are the original
nodes, all at equal depth, and path minima between leaves equal path minima
in the source tree.

The balanced variant additionally caps degrees before each round by splitting
high-degree nodes (the two halves joined by a synthetic ``TOP`` edge whose
weight exceeds every real weight, so it can never become a path bottleneck)
and prunes every marked path of three edges by unmarking its middle edge.
Components then have diameter at most 2 and at most ``c + 1`` members, which
bounds children counts and gives logarithmic height.

Split copies made in round 0 become extra leaves; copies made in later rounds
are connectivity-only "ghost" nodes that never appear in the output tree.  A
component whose only output-bearing member would be a single child is repaired
by merging it into an adjacent component (preferring merges across synthetic
``TOP`` edges) or by stealing a spare satellite member from an adjacent large
component; repairs keep children counts within [2, c+1].
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._accel import njit
from .tree import NONE_WEIGHT, TOP, RootedTree, WeightedTree, _freeze


@dataclass(frozen=True)
class BalanceParams:
    """Degree cap for the balanced builder; c >= 4 keeps the shrink factor < 1."""

    c: int = 4

    def __post_init__(self) -> None:
        if self.c < 4:
            raise ValueError("degree cap c must be at least 4")

    @property
    def shrink_factor(self) -> float:
        return (self.c - 1) / (2 * self.c - 4)


@dataclass(frozen=True, eq=False)
class BoruvkaTree:
    """Contraction tree plus the leaf map from original nodes.

    Node ids are creation-ordered: leaves first (original node i is leaf i),
    hypernodes afterwards, so every parent id exceeds its children's ids.
    """

    rooted: RootedTree
    leaf_of: np.ndarray
    n_original: int
    n_leaves: int
    round_of: np.ndarray
    rounds_log: np.ndarray  # per round: (count before split, after split, components)
    repair_stats: np.ndarray  # (single-child merges, satellite moves, ghost merges, unused)
    balanced: bool
    c: int | None

    @property
    def size(self) -> int:
        return self.rooted.n

    @property
    def height(self) -> int:
        return self.rooted.height


_STATUS_OK = 0
_STATUS_REPAIR_FAILED = 1
_STATUS_BAD_COMPONENT = 2
_STATUS_NOT_A_TREE = 3


@njit
def _contract(n, eu0, ev0, ew0, c_cap, balanced):
    """Run the marking/shrinking rounds; returns the packed tree arrays.

    Every per-round pass is a sequential sweep over the edge array; per-node
    adjacency lists are materialized only where they are needed (degree-capped
    splitting and the rare repair surgery).
    """
    maxb = 3 * n + 16
    bpar = np.full(maxb, -1, dtype=np.int32)
    bpw = np.full(maxb, NONE_WEIGHT, dtype=np.int64)
    bround = np.zeros(maxb, dtype=np.int32)
    rounds_log = np.zeros((70, 3), dtype=np.int64)
    stats = np.zeros(4, dtype=np.int64)

    # Working edge arrays, kept sorted by global edge id (creation order).
    ecap = 4 * n + 64
    ea = np.empty(ecap, dtype=np.int32)
    eb = np.empty(ecap, dtype=np.int32)
    ew = np.empty(ecap, dtype=np.int64)
    marked = np.zeros(ecap, dtype=np.uint8)
    ne = n - 1
    for i in range(ne):
        ea[i] = eu0[i]
        eb[i] = ev0[i]
        ew[i] = ew0[i]

    # Working nodes: wb[u] = output node id, -1 for ghosts.
    wcap = 3 * n + 16
    wb = np.empty(wcap, dtype=np.int32)
    for i in range(n):
        wb[i] = i
    nw = n
    bcount = n
    n_leaves = n

    # Round-scoped scratch, allocated once and reset by prefix.
    lcap = 2 * ne + 64
    lst = np.empty(lcap, dtype=np.int32)
    ls_start = np.empty(wcap, dtype=np.int32)
    ls_len = np.empty(wcap, dtype=np.int32)
    degb = np.empty(wcap, dtype=np.int32)
    cand = np.empty(wcap, dtype=np.int32)
    bestw = np.empty(wcap, dtype=np.int64)
    mark_eidx = np.empty(wcap, dtype=np.int32)
    mdeg = np.empty(wcap, dtype=np.int32)
    comp = np.empty(wcap, dtype=np.int32)
    ufp = np.empty(wcap, dtype=np.int32)
    nxt = np.empty(wcap, dtype=np.int32)
    anchored = np.empty(wcap, dtype=np.uint8)
    infl = np.zeros(wcap, dtype=np.uint8)
    flagged = np.empty(wcap, dtype=np.int32)
    alive = np.empty(wcap, dtype=np.uint8)
    realcount = np.empty(wcap, dtype=np.int32)
    head = np.empty(wcap, dtype=np.int32)
    tail_m = np.empty(wcap, dtype=np.int32)
    newid = np.empty(wcap, dtype=np.int32)
    wbn = np.empty(wcap, dtype=np.int32)
    badq = np.empty(wcap, dtype=np.int32)
    cutmem = np.empty(wcap, dtype=np.int32)
    cut_par_e = np.empty(wcap, dtype=np.int32)
    cut_sub = np.empty(wcap, dtype=np.int32)
    cut_vis = np.zeros(wcap, dtype=np.uint8)
    cut_bfs = np.empty(wcap, dtype=np.int32)

    root = -1
    rnd = 0
    status = _STATUS_OK
    while True:
        # Stop once a single output-bearing node remains.
        nreal = 0
        last_real = -1
        for u in range(nw):
            if wb[u] >= 0:
                nreal += 1
                last_real = u
        if nreal <= 1:
            root = wb[last_real]
            break

        pre_split = nw

        # --- split phase (balanced only): cap every degree at c ---
        # Adjacency lists are gathered just for the overfull nodes; splits
        # rewrite only those lists and reassign edge endpoints in place.
        if balanced:
            for u in range(nw):
                degb[u] = 0
            for e in range(ne):
                degb[ea[e]] += 1
                degb[eb[e]] += 1
            ncand = 0
            for u in range(nw):
                if degb[u] > c_cap:
                    cand[ncand] = u
                    ncand += 1
            if ncand > 0:
                tail = 0
                for t in range(ncand):
                    u = cand[t]
                    ls_start[u] = tail
                    ls_len[u] = 0
                    tail += degb[u]
                for e in range(ne):
                    a = ea[e]
                    if degb[a] > c_cap:
                        lst[ls_start[a] + ls_len[a]] = e
                        ls_len[a] += 1
                    b = eb[e]
                    if degb[b] > c_cap:
                        lst[ls_start[b] + ls_len[b]] = e
                        ls_len[b] += 1
                t = 0
                while t < ncand:
                    u = cand[t]
                    while ls_len[u] > c_cap:
                        d = ls_len[u]
                        keep = (d + 1) // 2
                        # New copy: a fresh leaf in round 0, a ghost afterwards.
                        w_new = nw
                        nw += 1
                        if rnd == 0:
                            wb[w_new] = bcount
                            bround[bcount] = 0
                            bcount += 1
                            n_leaves += 1
                        else:
                            wb[w_new] = -1
                        degb[w_new] = c_cap + 1  # keeps the gather guard true
                        # Reassign the second half (largest edge ids).
                        for j in range(keep, d):
                            e = lst[ls_start[u] + j]
                            if ea[e] == u:
                                ea[e] = w_new
                            else:
                                eb[e] = w_new
                        # Fresh TOP join edge, appended => largest id so far.
                        if ne + 1 > ecap:
                            ncap = ecap * 2
                            ea2 = np.empty(ncap, dtype=np.int32)
                            eb2 = np.empty(ncap, dtype=np.int32)
                            ew2 = np.empty(ncap, dtype=np.int64)
                            mk2 = np.zeros(ncap, dtype=np.uint8)
                            ea2[:ne] = ea[:ne]
                            eb2[:ne] = eb[:ne]
                            ew2[:ne] = ew[:ne]
                            ea, eb, ew, marked, ecap = ea2, eb2, ew2, mk2, ncap
                        join = ne
                        ea[join] = u
                        eb[join] = w_new
                        ew[join] = TOP
                        ne += 1
                        # Rewrite both lists at the buffer tail.
                        need = d + 2
                        if tail + need > lcap:
                            ncap2 = max(lcap * 2, tail + need + 64)
                            tmp = np.empty(ncap2, dtype=np.int32)
                            tmp[:tail] = lst[:tail]
                            lst, lcap = tmp, ncap2
                        new_u_start = tail
                        for j in range(keep):
                            lst[tail] = lst[ls_start[u] + j]
                            tail += 1
                        lst[tail] = join
                        tail += 1
                        new_w_start = tail
                        for j in range(keep, d):
                            lst[tail] = lst[ls_start[u] + j]
                            tail += 1
                        lst[tail] = join
                        tail += 1
                        ls_start[u] = new_u_start
                        ls_len[u] = keep + 1
                        ls_start[w_new] = new_w_start
                        ls_len[w_new] = d - keep + 1
                        cand[ncand] = w_new
                        ncand += 1
                    t += 1

        post_split = nw

        # --- mark phase: every node marks its max-weight incident edge ---
        # One ascending sweep; strict improvement keeps the smallest edge id
        # on weight ties.
        for u in range(nw):
            bestw[u] = NONE_WEIGHT
            mark_eidx[u] = -1
            mdeg[u] = 0
        for e in range(ne):
            marked[e] = 0
            w = ew[e]
            a = ea[e]
            if w > bestw[a]:
                bestw[a] = w
                mark_eidx[a] = e
            b = eb[e]
            if w > bestw[b]:
                bestw[b] = w
                mark_eidx[b] = e
        for u in range(nw):
            e = mark_eidx[u]
            if marked[e] == 0:
                marked[e] = 1
                mdeg[ea[e]] += 1
                mdeg[eb[e]] += 1

        # --- unmark (balanced) fused with marked-component union-find ---
        # One ascending sweep: an edge whose both endpoints still have
        # another marked edge is unmarked (pruning 3-edge marked paths to
        # stars); every edge kept marked is unioned.  Component ids stay
        # ordered by smallest member.
        for u in range(nw):
            ufp[u] = u
        for e in range(ne):
            if marked[e] == 0:
                continue
            a = ea[e]
            b = eb[e]
            if balanced and mdeg[a] >= 2 and mdeg[b] >= 2:
                marked[e] = 0
                mdeg[a] -= 1
                mdeg[b] -= 1
                continue
            ra = a
            while ufp[ra] != ra:
                ufp[ra] = ufp[ufp[ra]]
                ra = ufp[ra]
            rb = b
            while ufp[rb] != rb:
                ufp[rb] = ufp[ufp[rb]]
                rb = ufp[rb]
            if ra < rb:
                ufp[rb] = ra
            elif rb < ra:
                ufp[ra] = rb
        ncomp = 0
        for u in range(nw):
            r = u
            while ufp[r] != r:
                r = ufp[r]
            if r == u:
                comp[u] = ncomp
                ncomp += 1
            else:
                ufp[u] = r
                comp[u] = comp[r]

        for cid in range(ncomp):
            alive[cid] = 1
            realcount[cid] = 0
            head[cid] = -1
        for u in range(nw):
            cid = comp[u]
            nxt[u] = -1
            if wb[u] >= 0:
                realcount[cid] += 1
            if head[cid] < 0:
                head[cid] = u
                tail_m[cid] = u
            else:
                nxt[tail_m[cid]] = u
                tail_m[cid] = u

        # --- repair ---
        # Contracting any real edge that nobody recorded would erase its
        # weight from the output tree, so repairs may only merge components
        # across synthetic TOP join edges (never path minima), except for
        # the re-marked whole-family case where the contracted real edge is
        # recorded first.  Two shapes need repair: all-ghost components
        # (their hypernode would be a ghost surviving into the next round,
        # where it could mark real edges unrecorded) and components whose
        # hypernode would have a single child.
        if balanced:
            nflag = 0
            for cid in range(ncomp):
                if realcount[cid] <= 1:
                    m = head[cid]
                    while m >= 0:
                        if infl[m] == 0:
                            infl[m] = 1
                            flagged[nflag] = m
                            nflag += 1
                        m = nxt[m]
            if nflag > 0:
                # Adjacency lists for the members of problem components.
                for t in range(nflag):
                    ls_len[flagged[t]] = 0
                for e in range(ne):
                    if infl[ea[e]] == 1:
                        ls_len[ea[e]] += 1
                    if infl[eb[e]] == 1:
                        ls_len[eb[e]] += 1
                tail = 0
                for t in range(nflag):
                    u = flagged[t]
                    ls_start[u] = tail
                    tail += ls_len[u]
                    ls_len[u] = 0
                for e in range(ne):
                    a = ea[e]
                    if infl[a] == 1:
                        lst[ls_start[a] + ls_len[a]] = e
                        ls_len[a] += 1
                    b = eb[e]
                    if infl[b] == 1:
                        lst[ls_start[b] + ls_len[b]] = e
                        ls_len[b] += 1

                for u in range(nw):
                    anchored[u] = 0

                # Pass 0: merge every all-ghost component out via a TOP join.
                bq_h = 0
                bq_t = 0
                for cid in range(ncomp):
                    if realcount[cid] == 0:
                        badq[bq_t] = cid
                        bq_t += 1
                while bq_h < bq_t:
                    cid = badq[bq_h]
                    bq_h += 1
                    if alive[cid] == 0 or realcount[cid] != 0:
                        continue
                    tgt = -1
                    via_m = -1
                    via_x = -1
                    m = head[cid]
                    while m >= 0 and tgt < 0:
                        if comp[m] == cid:
                            for j in range(ls_len[m]):
                                e = lst[ls_start[m] + j]
                                if ew[e] != TOP:
                                    continue
                                x = eb[e] if ea[e] == m else ea[e]
                                did = comp[x]
                                if did != cid and alive[did] == 1:
                                    tgt = did
                                    via_m = m
                                    via_x = x
                                    break
                        m = nxt[m]
                    if tgt < 0:
                        status = 11
                        break
                    m = head[cid]
                    while m >= 0:
                        if comp[m] == cid:
                            comp[m] = tgt
                        m = nxt[m]
                    nxt[tail_m[tgt]] = head[cid]
                    tail_m[tgt] = tail_m[cid]
                    alive[cid] = 0
                    anchored[via_m] = 1
                    anchored[via_x] = 1
                    stats[2] += 1
                    if realcount[tgt] == 0:
                        badq[bq_t] = tgt
                        bq_t += 1
                if status != _STATUS_OK:
                    break

                # Pass 1: fix single-child components.
                bq_h = 0
                bq_t = 0
                for cid in range(ncomp):
                    if alive[cid] == 1 and realcount[cid] == 1:
                        badq[bq_t] = cid
                        bq_t += 1
                while bq_h < bq_t:
                    cid = badq[bq_h]
                    bq_h += 1
                    if alive[cid] == 0 or realcount[cid] != 1:
                        continue

                    # One scan of the component's boundary.  TOP joins give
                    # the merge candidates (classes, best first):
                    #   1: join into a component with 2..c output members
                    #   2: join into another single-child component
                    #   4: join into an all-ghost component (merge, requeue)
                    #   5: join into a full component (merge, then split the
                    #      oversized result at a balanced safe-edge cut)
                    # The maximum real boundary edge is tracked for the
                    # no-joins-at-all case below.
                    best_class = 99
                    best_comp = -1
                    best_m = -1
                    best_x = -1
                    real_e = -1
                    real_w = NONE_WEIGHT
                    real_m = -1
                    real_x = -1
                    the_real = -1
                    m = head[cid]
                    while m >= 0 and best_class > 1:
                        if comp[m] == cid:
                            if wb[m] >= 0:
                                the_real = m
                            for j in range(ls_len[m]):
                                e = lst[ls_start[m] + j]
                                x = eb[e] if ea[e] == m else ea[e]
                                did = comp[x]
                                if did == cid or alive[did] == 0:
                                    continue
                                if ew[e] != TOP:
                                    if ew[e] > real_w:
                                        real_w = ew[e]
                                        real_e = e
                                        real_m = m
                                        real_x = x
                                    continue
                                rc = realcount[did]
                                if 2 <= rc <= c_cap:
                                    klass = 1
                                elif rc == 1:
                                    klass = 2
                                elif rc == 0:
                                    klass = 4
                                else:
                                    klass = 5
                                if klass < best_class:
                                    best_class = klass
                                    best_comp = did
                                    best_m = m
                                    best_x = x
                                    if best_class == 1:
                                        break
                        m = nxt[m]

                    if best_class == 99:
                        # No joins on the boundary at all: the component is
                        # one whole split family that attracted no external
                        # marks.  It acts as the unsplit node: re-mark it
                        # with its maximum real boundary edge, recorded on
                        # the primary, so contracting that edge loses
                        # nothing.
                        if real_e < 0:
                            status = 12
                            break
                        mark_eidx[the_real] = real_e
                        best_comp = comp[real_x]
                        best_m = real_m
                        best_x = real_x
                        rc = realcount[best_comp]
                        if 1 <= rc <= c_cap:
                            best_class = 1
                        elif rc == 0:
                            best_class = 4
                        else:
                            best_class = 5

                    # Merge (all classes; class 5 splits afterwards).
                    m = head[cid]
                    while m >= 0:
                        if comp[m] == cid:
                            comp[m] = best_comp
                        m = nxt[m]
                    nxt[tail_m[best_comp]] = head[cid]
                    tail_m[best_comp] = tail_m[cid]
                    realcount[best_comp] += 1
                    alive[cid] = 0
                    anchored[best_m] = 1
                    anchored[best_x] = 1
                    stats[0] += 1
                    if realcount[best_comp] == 1:
                        badq[bq_t] = best_comp
                        bq_t += 1

                    if best_class == 5:
                        # The merged component has c + 2 output members.
                        # Its internal edges are all marked or TOP (safe to
                        # cut or contract) and its degrees are at most c, so
                        # a cut with 2..c output members on both sides
                        # exists; un-contract the cut edge by splitting into
                        # two components.  Adjacency lists are extended to
                        # the members that joined from the target side.
                        did = best_comp
                        cm = 0
                        grew = 0
                        m = head[did]
                        while m >= 0:
                            if comp[m] == did:
                                cutmem[cm] = m
                                cm += 1
                                if infl[m] == 0:
                                    infl[m] = 2  # marks a freshly needed list
                                    flagged[nflag] = m
                                    nflag += 1
                                    grew += 1
                            m = nxt[m]
                        if grew > 0:
                            base = nflag - grew
                            for t in range(base, nflag):
                                ls_len[flagged[t]] = 0
                            for e in range(ne):
                                if infl[ea[e]] == 2:
                                    ls_len[ea[e]] += 1
                                if infl[eb[e]] == 2:
                                    ls_len[eb[e]] += 1
                            for t in range(base, nflag):
                                u = flagged[t]
                                ls_start[u] = tail
                                tail += ls_len[u]
                                ls_len[u] = 0
                            if tail > lcap:
                                status = 16
                                break
                            for e in range(ne):
                                a = ea[e]
                                if infl[a] == 2:
                                    lst[ls_start[a] + ls_len[a]] = e
                                    ls_len[a] += 1
                                b = eb[e]
                                if infl[b] == 2:
                                    lst[ls_start[b] + ls_len[b]] = e
                                    ls_len[b] += 1
                            for t in range(base, nflag):
                                infl[flagged[t]] = 1
                        rootm = cutmem[0]
                        cut_vis[rootm] = 1
                        cut_par_e[rootm] = -1
                        cut_bfs[0] = rootm
                        bh = 0
                        bt = 1
                        while bh < bt:
                            y = cut_bfs[bh]
                            bh += 1
                            for j in range(ls_len[y]):
                                e = lst[ls_start[y] + j]
                                z = eb[e] if ea[e] == y else ea[e]
                                if comp[z] == did and cut_vis[z] == 0:
                                    cut_vis[z] = 1
                                    cut_par_e[z] = e
                                    cut_bfs[bt] = z
                                    bt += 1
                        rtot = realcount[did]
                        for t in range(bt):
                            cut_sub[cut_bfs[t]] = 1 if wb[cut_bfs[t]] >= 0 else 0
                        cut_e = -1
                        cut_child = -1
                        for t in range(bt - 1, 0, -1):
                            y = cut_bfs[t]
                            e = cut_par_e[y]
                            p = eb[e] if ea[e] == y else ea[e]
                            r = cut_sub[y]
                            if 2 <= r <= rtot - 2 and (cut_e < 0 or e < cut_e):
                                cut_e = e
                                cut_child = y
                            cut_sub[p] += r
                        for t in range(bt):
                            cut_vis[cut_bfs[t]] = 0
                        if cut_e < 0:
                            status = 15
                            break
                        newc = ncomp
                        ncomp += 1
                        cut_bfs[0] = cut_child
                        comp[cut_child] = newc
                        bh = 0
                        bt2 = 1
                        while bh < bt2:
                            y = cut_bfs[bh]
                            bh += 1
                            for j in range(ls_len[y]):
                                e = lst[ls_start[y] + j]
                                if e == cut_e:
                                    continue
                                z = eb[e] if ea[e] == y else ea[e]
                                if comp[z] == did:
                                    comp[z] = newc
                                    cut_bfs[bt2] = z
                                    bt2 += 1
                        # Rebuild both chains and counts.
                        head[did] = -1
                        head[newc] = -1
                        rc_old = 0
                        rc_new = 0
                        for t in range(cm):
                            y = cutmem[t]
                            tgt = comp[y]
                            nxt[y] = -1
                            if head[tgt] < 0:
                                head[tgt] = y
                                tail_m[tgt] = y
                            else:
                                nxt[tail_m[tgt]] = y
                                tail_m[tgt] = y
                            if wb[y] >= 0:
                                if tgt == did:
                                    rc_old += 1
                                else:
                                    rc_new += 1
                        realcount[did] = rc_old
                        realcount[newc] = rc_new
                        alive[newc] = 1
                        stats[1] += 1
                for t in range(nflag):
                    infl[flagged[t]] = 0
                if status != _STATUS_OK:
                    break

        # --- hypernodes and output parent edges ---
        nw_next = 0
        for cid in range(ncomp):
            if alive[cid] == 1:
                newid[cid] = nw_next
                nw_next += 1
            else:
                newid[cid] = -1
        for i in range(nw_next):
            wbn[i] = -1
        for cid in range(ncomp):
            if alive[cid] == 0:
                continue
            if realcount[cid] == 1:
                status = _STATUS_BAD_COMPONENT
                break
            if realcount[cid] >= 2:
                wbn[newid[cid]] = bcount
                bround[bcount] = rnd + 1
                bcount += 1
        if status != _STATUS_OK:
            break
        for u in range(nw):
            if wb[u] >= 0:
                hid = wbn[newid[comp[u]]]
                bpar[wb[u]] = hid
                bpw[wb[u]] = ew[mark_eidx[u]]

        # --- contract: keep only cross-component edges ---
        ke = 0
        for e in range(ne):
            ca = newid[comp[ea[e]]]
            cb = newid[comp[eb[e]]]
            if ca != cb:
                ea[ke] = ca
                eb[ke] = cb
                ew[ke] = ew[e]
                ke += 1
        if ke != nw_next - 1:
            status = _STATUS_NOT_A_TREE
            break
        ne = ke
        for i in range(nw_next):
            wb[i] = wbn[i]
        nw = nw_next

        rounds_log[rnd, 0] = pre_split
        rounds_log[rnd, 1] = post_split
        rounds_log[rnd, 2] = nw_next
        rnd += 1

    return (
        bpar[:bcount].copy(),
        bpw[:bcount].copy(),
        bround[:bcount].copy(),
        root,
        n_leaves,
        rounds_log[:rnd].copy(),
        stats,
        status,
    )




@njit
def _depths_from_parents(bpar, root):
    nb = bpar.shape[0]
    depth = np.zeros(nb, dtype=np.int32)
    depth[root] = 1
    for i in range(nb - 1, -1, -1):
        if i != root:
            depth[i] = depth[bpar[i]] + 1
    return depth


def _build(t: WeightedTree, c_cap: int, balanced: bool) -> BoruvkaTree:
    bpar, bpw, bround, root, n_leaves, rlog, stats, status = _contract(
        t.n, t.eu, t.ev, t.ew, c_cap, balanced
    )
    if status != _STATUS_OK:
        raise RuntimeError(f"contraction failed with status {status}")
    depth = _depths_from_parents(bpar, root)
    rooted = RootedTree(len(bpar), int(root), _freeze(bpar), _freeze(bpw), _freeze(depth))
    leaf_of = np.arange(t.n, dtype=np.int32)
    return BoruvkaTree(
        rooted=rooted,
        leaf_of=_freeze(leaf_of),
        n_original=t.n,
        n_leaves=int(n_leaves),
        round_of=_freeze(bround),
        rounds_log=rlog,
        repair_stats=stats,
        balanced=balanced,
        c=c_cap if balanced else None,
    )


def build_boruvka(t: WeightedTree) -> BoruvkaTree:
    """Standard max-variant Boruvka tree; leaves are exactly the original nodes."""
    return _build(t, c_cap=np.iinfo(np.int64).max // 2, balanced=False)


def build_balanced_boruvka(t: WeightedTree, params: BalanceParams = BalanceParams()) -> BoruvkaTree:
    """Balanced Boruvka tree: children counts in [2, c+1], height O(log n)."""
    return _build(t, c_cap=params.c, balanced=True)


@dataclass
class BoruvkaCheck:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, msg: str) -> None:
        self.violations.append(msg)


def check_boruvka_invariants(b: BoruvkaTree, params: BalanceParams | None = None) -> BoruvkaCheck:
    """Structural validator; returns a report rather than raising.

    Checks uniform leaf depth, children counts (>= 2 everywhere, <= c+1 when
    balanced), the depth-count bound count(depth <= k) <= size / 2^(h-k), the
    per-round shrink factor and the 4n total-size bound for balanced trees.
    """
    rep = BoruvkaCheck()
    r = b.rooted
    nb = r.n
    h = b.height
    nchild = np.zeros(nb, dtype=np.int64)
    for v in range(nb):
        p = r.parent[v]
        if p >= 0:
            if p <= v:
                rep.add(f"node {v}: parent id {p} not greater than child id")
            nchild[p] += 1
    for v in range(b.n_leaves):
        if nchild[v] != 0:
            rep.add(f"leaf {v} has children")
        if r.depth[v] != h:
            rep.add(f"leaf {v} at depth {r.depth[v]}, expected {h}")
    for v in range(b.n_leaves, nb):
        if nchild[v] < 2:
            rep.add(f"internal node {v} has {nchild[v]} children (< 2)")
        if params is not None and nchild[v] > params.c + 1:
            rep.add(f"internal node {v} has {nchild[v]} children (> c+1 = {params.c + 1})")
    # Depth-count bound: nodes at depth <= k number at most size / 2^(h-k).
    counts = np.bincount(r.depth, minlength=h + 1)
    cum = 0
    for k in range(1, h + 1):
        cum += int(counts[k])
        if cum * (1 << (h - k)) > nb:
            rep.add(f"depth-count bound violated at k={k}: {cum} > {nb}/2^{h - k}")
    if b.balanced and params is not None:
        num = params.c - 1
        den = 2 * params.c - 4
        for i in range(b.rounds_log.shape[0]):
            pre, _post, after = b.rounds_log[i]
            if int(after) * den > num * int(pre):
                rep.add(
                    f"round {i}: shrink {int(after)}/{int(pre)} exceeds {num}/{den}"
                )
        if nb > 4 * b.n_original:
            rep.add(f"total size {nb} exceeds 4n = {4 * b.n_original}")
        hi = int(np.ceil(np.log2(max(b.n_original, 2)))) + 1
        if b.n_original >= 2 and h > hi:
            rep.add(f"height {h} exceeds ceil(log2 n) + 1 = {hi}")
    for v in range(nb):
        if v != r.root and r.parent_weight[v] == NONE_WEIGHT:
            rep.add(f"non-root node {v} lacks a parent weight")
    return rep
