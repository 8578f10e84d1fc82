"""Compiled search core for homeomorphic embedding queries.

Array-based mirror of the pure-Python searcher in embedding.py, JIT-compiled
with numba and driven as an explicit backtracking machine (no native
recursion).  Hosts and patterns must have maximum degree 3 and at most 48
vertices; anything else falls back to the Python implementation.  Both
engines implement the same pruning rules and must agree on every verdict;
the test suite cross-checks them.

run_search returns status 1 (witness found, copied into the sol_* arrays),
0 (exhausted, no witness) or -1 (node budget exceeded, verdict unknown).
"""

from __future__ import annotations

import numpy as np
from numba import njit

INF = 10 ** 6

# frame kinds
_FRAME_VERTEX = 0
_FRAME_STEP = 1
# undo kinds
_UNDO_NONE = 0
_UNDO_MAP = 1
_UNDO_INTERNAL = 2
_UNDO_COMPLETE = 3
# pass results
_PASS_FAIL = -1
_PASS_DONE = 1
_PASS_MAP = 2
_PASS_ROUTE = 3


@njit(cache=True)
def _bit_index(b):
    i = 0
    while b > 1:
        b >>= 1
        i += 1
    return i


@njit(cache=True)
def _popcount(m):
    c = 0
    while m:
        m &= m - 1
        c += 1
    return c


@njit(cache=True)
def _bfs_fill(src, avail, used0, n, dist, queue):
    for i in range(n):
        dist[i] = INF
    dist[src] = 0
    head = 0
    tail = 0
    queue[tail] = src
    tail += 1
    while head < tail:
        x = queue[head]
        head += 1
        m = avail[x]
        while m:
            b = m & (-m)
            m ^= b
            y = _bit_index(b)
            if dist[y] == INF:
                dist[y] = dist[x] + 1
                if not ((used0 >> y) & 1):
                    queue[tail] = y
                    tail += 1


@njit(cache=True)
def _matching_ok(cand_mask, gv_list, gcount, n, match, sizes, stack_v, stack_m, path_g, path_h):
    for i in range(n):
        match[i] = -1
    for i in range(gcount):
        sizes[i] = _popcount(cand_mask[gv_list[i]])
    order = np.argsort(sizes[:gcount])
    for oi in range(gcount):
        gv = gv_list[order[oi]]
        seen = 0
        top = 0
        stack_v[0] = gv
        stack_m[0] = cand_mask[gv]
        found = False
        while top >= 0:
            if stack_m[top] == 0:
                top -= 1
                continue
            b = stack_m[top] & (-stack_m[top])
            stack_m[top] ^= b
            hi = _bit_index(b)
            if (seen >> hi) & 1:
                continue
            seen |= 1 << hi
            path_g[top] = stack_v[top]
            path_h[top] = hi
            if match[hi] == -1:
                for k in range(top, -1, -1):
                    match[path_h[k]] = path_g[k]
                found = True
                break
            top += 1
            stack_v[top] = match[hi]
            stack_m[top] = cand_mask[match[hi]] & (~seen)
        if not found:
            return False
    return True


@njit(cache=True)
def _global_pass(n, gm, m, gnbr, gdeg, eu, ev, edge_of, single, order,
                 avail, usedA, img, plen,
                 scal, dist_buf, src_of, queue, first_mask,
                 out_pick, out_cands,
                 mt_match, mt_sizes, mt_sv, mt_sm, mt_pg, mt_ph,
                 cand_mask, gv_list):
    """Feasibility pass; picks the next decision.

    Returns _PASS_FAIL, _PASS_DONE, _PASS_MAP (out_pick[0]=gv, candidates in
    out_cands) or _PASS_ROUTE (out_pick[0]=edge, out_pick[1]=budget).
    """
    unmapped = gm - scal[3]
    if scal[0] < unmapped:
        return _PASS_FAIL
    if scal[1] < m - scal[4]:
        return _PASS_FAIL
    used0 = usedA[0]

    # slot and usable-slot check at every mapped image
    for gv in range(gm):
        hi = img[gv]
        if hi < 0:
            continue
        pending = 0
        partners = 0
        for k in range(gdeg[gv]):
            w = gnbr[gv, k]
            if plen[edge_of[gv, w]] < 0:
                pending += 1
                if img[w] >= 0:
                    partners |= 1 << img[w]
        if pending == 0:
            continue
        acount = 0
        usable = 0
        mm = avail[hi]
        while mm:
            bit = mm & (-mm)
            mm ^= bit
            z = _bit_index(bit)
            acount += 1
            if (partners >> z) & 1:
                usable += 1
            elif not ((used0 >> z) & 1) and _popcount(avail[z]) >= 2:
                usable += 1
        if acount < pending or usable < pending:
            return _PASS_FAIL

    dead = 0
    for hi in range(n):
        if not ((used0 >> hi) & 1) and _popcount(avail[hi]) < 2:
            dead += 1

    for i in range(n):
        src_of[i] = -1
    nsrc = 0
    internals = 0
    best_e = -1
    best_d = INF
    for oi in range(m):
        e = order[oi]
        if plen[e] >= 0:
            continue
        a = img[eu[e]]
        b = img[ev[e]]
        if a < 0 or b < 0:
            continue
        if (avail[a] >> b) & 1:
            if best_d > 1:
                best_e = e
                best_d = 1
            continue
        if single[e]:
            return _PASS_FAIL
        if src_of[b] < 0:
            _bfs_fill(b, avail, used0, n, dist_buf[nsrc], queue)
            src_of[b] = nsrc
            nsrc += 1
        d = dist_buf[src_of[b]][a]
        if d >= INF:
            return _PASS_FAIL
        internals += d - 1
        if d < best_d:
            best_e = e
            best_d = d
    slack = scal[0] - unmapped - internals
    if slack < 0 or dead > slack:
        return _PASS_FAIL

    gcount = 0
    future = 0
    for gv in range(gm):
        if img[gv] >= 0:
            continue
        need = gdeg[gv]
        nmaps = 0
        mrow0 = -1
        mrow1 = -1
        mrow2 = -1
        for k in range(gdeg[gv]):
            w = gnbr[gv, k]
            if img[w] >= 0:
                a = img[w]
                if src_of[a] < 0:
                    _bfs_fill(a, avail, used0, n, dist_buf[nsrc], queue)
                    src_of[a] = nsrc
                    nsrc += 1
                if nmaps == 0:
                    mrow0 = src_of[a]
                elif nmaps == 1:
                    mrow1 = src_of[a]
                else:
                    mrow2 = src_of[a]
                nmaps += 1
        best = INF
        msk = 0
        for hi in range(n):
            if (used0 >> hi) & 1:
                continue
            acount = 0
            usable = 0
            mm = avail[hi]
            while mm:
                bit = mm & (-mm)
                mm ^= bit
                z = _bit_index(bit)
                acount += 1
                if (used0 >> z) & 1:
                    usable += 1
                elif _popcount(avail[z]) >= 2:
                    usable += 1
            if acount < need or usable < need:
                continue
            cost = 0
            ok = True
            for t in range(nmaps):
                row = mrow0 if t == 0 else (mrow1 if t == 1 else mrow2)
                d = dist_buf[row][hi]
                if d >= INF:
                    ok = False
                    break
                cost += d - 1
            if not ok or cost > slack:
                continue
            msk |= 1 << hi
            if cost < best:
                best = cost
        if msk == 0:
            return _PASS_FAIL
        cand_mask[gv] = msk
        gv_list[gcount] = gv
        gcount += 1
        future += best
    if future + dead > slack:
        return _PASS_FAIL
    slack -= future + dead

    if gcount > 0 and not _matching_ok(cand_mask, gv_list, gcount, n,
                                       mt_match, mt_sizes, mt_sv, mt_sm,
                                       mt_pg, mt_ph):
        return _PASS_FAIL

    if best_e >= 0:
        e = best_e
        b = img[ev[e]]
        if src_of[b] < 0:
            _bfs_fill(b, avail, used0, n, dist_buf[nsrc], queue)
            src_of[b] = nsrc
            nsrc += 1
        out_pick[0] = e
        out_pick[1] = best_d - 1 + slack
        out_pick[2] = src_of[b]
        return _PASS_ROUTE

    if gcount == 0:
        return _PASS_DONE

    # vertex choice: fail-first when some candidate set is tiny, else follow
    # the ear order
    pick = -1
    best_cnt = INF
    for i in range(gcount):
        gv = gv_list[i]
        c = _popcount(cand_mask[gv])
        if c < best_cnt:
            best_cnt = c
            pick = gv
    if best_cnt > 3:
        for oi in range(m):
            e = order[oi]
            if plen[e] >= 0:
                continue
            if img[eu[e]] < 0:
                pick = eu[e]
                break
            if img[ev[e]] < 0:
                pick = ev[e]
                break

    gv = pick
    nmaps = 0
    mrow0 = -1
    mrow1 = -1
    mrow2 = -1
    for k in range(gdeg[gv]):
        w = gnbr[gv, k]
        if img[w] >= 0:
            a = img[w]
            row = src_of[a]
            if row < 0:
                _bfs_fill(a, avail, used0, n, dist_buf[nsrc], queue)
                src_of[a] = nsrc
                row = nsrc
                nsrc += 1
            if nmaps == 0:
                mrow0 = row
            elif nmaps == 1:
                mrow1 = row
            else:
                mrow2 = row
            nmaps += 1
    mm = cand_mask[gv]
    ccount = 0
    while mm:
        bit = mm & (-mm)
        mm ^= bit
        hi = _bit_index(bit)
        if scal[3] == 0 and not ((first_mask >> hi) & 1):
            continue
        cost = 0
        for t in range(nmaps):
            row = mrow0 if t == 0 else (mrow1 if t == 1 else mrow2)
            cost += dist_buf[row][hi] - 1
        out_cands[ccount, 0] = cost * 64 + hi
        out_cands[ccount, 1] = hi
        ccount += 1
    # insertion sort by key
    for i in range(1, ccount):
        k0 = out_cands[i, 0]
        k1 = out_cands[i, 1]
        j = i - 1
        while j >= 0 and out_cands[j, 0] > k0:
            out_cands[j + 1, 0] = out_cands[j, 0]
            out_cands[j + 1, 1] = out_cands[j, 1]
            j -= 1
        out_cands[j + 1, 0] = k0
        out_cands[j + 1, 1] = k1
    out_pick[0] = gv
    out_pick[1] = ccount
    return _PASS_MAP


@njit(cache=True)
def _step_candidates(e, x, b, n, avail, usedA, route_dist, route_budget, plen, out):
    """Ordered continuations for the partial path of edge e ending at x."""
    dist = route_dist[e]
    budget = route_budget[e]
    L = plen[e]
    used0 = usedA[0]
    count = 0
    mm = avail[x]
    while mm:
        bit = mm & (-mm)
        mm ^= bit
        y = _bit_index(bit)
        if y == b:
            out[count, 0] = -1  # sort first
            out[count, 1] = y
            count += 1
        elif not ((used0 >> y) & 1) and dist[y] < INF and L + dist[y] - 1 <= budget:
            out[count, 0] = dist[y] * 64 + y
            out[count, 1] = y
            count += 1
    for i in range(1, count):
        k0 = out[i, 0]
        k1 = out[i, 1]
        j = i - 1
        while j >= 0 and out[j, 0] > k0:
            out[j + 1, 0] = out[j, 0]
            out[j + 1, 1] = out[j, 1]
            j -= 1
        out[j + 1, 0] = k0
        out[j + 1, 1] = k1
    return count


@njit(cache=True)
def _machine(n, gm, m, gnbr, gdeg, eu, ev, edge_of, single, order,
             avail, usedA, img, plen, pbuf,
             scal, dist_buf, src_of, queue, route_dist, route_budget,
             budget, first_mask,
             sol_img, sol_plen, sol_pbuf,
             mt_match, mt_sizes, mt_sv, mt_sm, mt_pg, mt_ph,
             cand_mask, gv_list,
             fkind, ftarget, fx, fcand, fncand, fidx, fundo, fub):
    out_pick = np.zeros(3, dtype=np.int64)
    r = _global_pass(n, gm, m, gnbr, gdeg, eu, ev, edge_of, single, order,
                     avail, usedA, img, plen, scal, dist_buf, src_of, queue,
                     first_mask, out_pick, fcand[0],
                     mt_match, mt_sizes, mt_sv, mt_sm, mt_pg, mt_ph,
                     cand_mask, gv_list)
    scal[2] += 1
    if r == _PASS_FAIL:
        return 0
    if r == _PASS_DONE:
        for gv in range(gm):
            sol_img[gv] = img[gv]
        for e in range(m):
            sol_plen[e] = plen[e]
            for i in range(plen[e]):
                sol_pbuf[e, i] = pbuf[e, i]
        return 1
    top = 0
    if r == _PASS_MAP:
        fkind[0] = _FRAME_VERTEX
        ftarget[0] = out_pick[0]
        fncand[0] = out_pick[1]
    else:
        e = out_pick[0]
        route_budget[e] = out_pick[1]
        for i in range(n):
            route_dist[e, i] = dist_buf[out_pick[2]][i]
        a = img[eu[e]]
        pbuf[e, 0] = a
        plen[e] = 1
        fkind[0] = _FRAME_STEP
        ftarget[0] = e
        fx[0] = a
        fncand[0] = _step_candidates(e, a, img[ev[e]], n, avail, usedA,
                                     route_dist, route_budget, plen, fcand[0])
    fidx[0] = 0
    fundo[0] = _UNDO_NONE

    while top >= 0:
        # undo the previously applied choice of this frame, if any
        uk = fundo[top]
        if uk != _UNDO_NONE:
            y = fub[top, 0]
            x = fub[top, 1]
            e = fub[top, 2]
            if uk == _UNDO_MAP:
                gv = ftarget[top]
                usedA[0] &= ~(np.int64(1) << y)
                img[gv] = -1
                scal[0] += 1
                scal[3] -= 1
            elif uk == _UNDO_INTERNAL:
                plen[e] -= 1
                usedA[0] &= ~(np.int64(1) << y)
                scal[0] += 1
                avail[x] |= np.int64(1) << y
                avail[y] |= np.int64(1) << x
                scal[1] += 1
            else:  # complete
                plen_before = fub[top, 3]
                plen[e] = plen_before
                avail[x] |= np.int64(1) << y
                avail[y] |= np.int64(1) << x
                scal[1] += 1
                scal[4] -= 1
            fundo[top] = _UNDO_NONE

        if fidx[top] >= fncand[top]:
            # frame exhausted; if it was a path frame at position > start,
            # the parent frame's undo restores the previous step
            if fkind[top] == _FRAME_STEP and plen[ftarget[top]] == 1 and top >= 0:
                # abandoning the whole route attempt for this edge
                e = ftarget[top]
                if fx[top] == pbuf[e, 0]:
                    plen[e] = -1
            top -= 1
            continue

        choice = fcand[top][fidx[top], 1]
        fidx[top] += 1

        if fkind[top] == _FRAME_VERTEX:
            gv = ftarget[top]
            hi = choice
            img[gv] = hi
            usedA[0] |= np.int64(1) << hi
            scal[0] -= 1
            scal[3] += 1
            fundo[top] = _UNDO_MAP
            fub[top, 0] = hi
        else:
            e = ftarget[top]
            x = fx[top]
            y = choice
            b = img[ev[e]]
            L = plen[e]
            avail[x] &= ~(np.int64(1) << y)
            avail[y] &= ~(np.int64(1) << x)
            scal[1] -= 1
            pbuf[e, L] = y
            plen[e] = L + 1
            if y == b:
                scal[4] += 1
                fundo[top] = _UNDO_COMPLETE
                fub[top, 0] = y
                fub[top, 1] = x
                fub[top, 2] = e
                fub[top, 3] = L
            else:
                usedA[0] |= np.int64(1) << y
                scal[0] -= 1
                fundo[top] = _UNDO_INTERNAL
                fub[top, 0] = y
                fub[top, 1] = x
                fub[top, 2] = e
                # push continuation frame immediately (no global pass)
                scal[2] += 1
                if budget >= 0 and scal[2] > budget:
                    return -1
                top += 1
                fkind[top] = _FRAME_STEP
                ftarget[top] = e
                fx[top] = y
                fncand[top] = _step_candidates(e, y, b, n, avail, usedA,
                                               route_dist, route_budget,
                                               plen, fcand[top])
                fidx[top] = 0
                fundo[top] = _UNDO_NONE
                continue

        # a vertex was mapped or a path completed: run the global pass
        scal[2] += 1
        if budget >= 0 and scal[2] > budget:
            return -1
        r = _global_pass(n, gm, m, gnbr, gdeg, eu, ev, edge_of, single, order,
                         avail, usedA, img, plen, scal, dist_buf, src_of,
                         queue, first_mask, out_pick, fcand[top + 1],
                         mt_match, mt_sizes, mt_sv, mt_sm, mt_pg, mt_ph,
                         cand_mask, gv_list)
        if r == _PASS_FAIL:
            continue
        if r == _PASS_DONE:
            for gv in range(gm):
                sol_img[gv] = img[gv]
            for e2 in range(m):
                sol_plen[e2] = plen[e2]
                for i in range(plen[e2]):
                    sol_pbuf[e2, i] = pbuf[e2, i]
            return 1
        top += 1
        if r == _PASS_MAP:
            fkind[top] = _FRAME_VERTEX
            ftarget[top] = out_pick[0]
            fncand[top] = out_pick[1]
        else:
            e = out_pick[0]
            route_budget[e] = out_pick[1]
            for i in range(n):
                route_dist[e, i] = dist_buf[out_pick[2]][i]
            a = img[eu[e]]
            pbuf[e, 0] = a
            plen[e] = 1
            fkind[top] = _FRAME_STEP
            ftarget[top] = e
            fx[top] = a
            fncand[top] = _step_candidates(e, a, img[ev[e]], n, avail, usedA,
                                           route_dist, route_budget, plen,
                                           fcand[top])
        fidx[top] = 0
        fundo[top] = _UNDO_NONE
    return 0


def run_search(n, gm, m, gnbr, gdeg, eu, ev, edge_of, single, order,
               avail, used_mask, img, plen, pbuf, free_vertices, avail_edges,
               mapped_count, routed_count, budget, first_mask):
    """Driver: allocate scratch, call the compiled machine, return results."""
    scal = np.array([free_vertices, avail_edges, 0, mapped_count, routed_count],
                    dtype=np.int64)
    usedA = np.array([used_mask], dtype=np.int64)
    maxdepth = gm + m + n + 8
    dist_buf = np.empty((n + 1, n), dtype=np.int32)
    src_of = np.empty(n, dtype=np.int32)
    queue = np.empty(n, dtype=np.int32)
    route_dist = np.empty((m, n), dtype=np.int32)
    route_budget = np.empty(m, dtype=np.int64)
    sol_img = np.full(gm, -1, dtype=np.int32)
    sol_plen = np.full(m, -1, dtype=np.int32)
    sol_pbuf = np.zeros((m, n + 1), dtype=np.int32)
    mt_match = np.empty(n, dtype=np.int32)
    mt_sizes = np.empty(max(gm, 1), dtype=np.int32)
    mt_sv = np.empty(n + 2, dtype=np.int32)
    mt_sm = np.empty(n + 2, dtype=np.int64)
    mt_pg = np.empty(n + 2, dtype=np.int32)
    mt_ph = np.empty(n + 2, dtype=np.int32)
    cand_mask = np.zeros(max(gm, 1), dtype=np.int64)
    gv_list = np.empty(max(gm, 1), dtype=np.int32)
    fkind = np.zeros(maxdepth, dtype=np.int32)
    ftarget = np.zeros(maxdepth, dtype=np.int32)
    fx = np.zeros(maxdepth, dtype=np.int32)
    fcand = np.zeros((maxdepth, n + 1, 2), dtype=np.int64)
    fncand = np.zeros(maxdepth, dtype=np.int32)
    fidx = np.zeros(maxdepth, dtype=np.int32)
    fundo = np.zeros(maxdepth, dtype=np.int32)
    fub = np.zeros((maxdepth, 4), dtype=np.int32)
    status = _machine(n, gm, m, gnbr, gdeg, eu, ev, edge_of, single, order,
                      avail, usedA, img, plen, pbuf,
                      scal, dist_buf, src_of, queue, route_dist, route_budget,
                      budget, first_mask,
                      sol_img, sol_plen, sol_pbuf,
                      mt_match, mt_sizes, mt_sv, mt_sm, mt_pg, mt_ph,
                      cand_mask, gv_list,
                      fkind, ftarget, fx, fcand, fncand, fidx, fundo, fub)
    return status, int(scal[2]), sol_img, sol_plen, sol_pbuf
