"""Array kernels for the linear-time passes.

Each kernel is plain Python over numpy arrays, written in the subset numba
compiles.  :func:`pick` hands out the compiled version for large inputs and
the interpreted one otherwise, so both paths run the same code.  ``-1``
stands for "undefined" in every integer array.
"""

from __future__ import annotations

import os
import types

import numpy as np

# inputs at least this large go through numba
JIT_CUTOFF = 3000
_compiled: dict = {}


def _jit_mode() -> str:
    return os.environ.get("INTERVALHAM_JIT", "auto")


def pick(name: str, size: int):
    """Kernel ``name``: the compiled version for large inputs, the plain one otherwise."""
    fn = globals()[name]
    mode = _jit_mode()
    if mode == "never" or (mode == "auto" and size < JIT_CUTOFF):
        return fn
    if name not in _compiled:
        _compiled[name] = _compile(fn)
    return _compiled[name]


_HELPERS = ("_sift_up", "_sift_down", "_push", "_pop", "_find")
_jit_globals: dict = {}


def _compile(fn):
    from numba import njit

    if not _jit_globals:
        _jit_globals.update(globals())
        for h in _HELPERS:
            _jit_globals[h] = njit(cache=True)(_rebind(globals()[h]))
    return njit(cache=True)(_rebind(fn))


def _rebind(fn):
    """Same code, resolving globals (the helpers above all) to their compiled versions."""
    clone = types.FunctionType(fn.__code__, _jit_globals, fn.__name__, fn.__defaults__, fn.__closure__)
    clone.__qualname__ = fn.__qualname__
    return clone


def _sift_up(heap, i):
    key = heap[i]
    while i > 0:
        parent = (i - 1) >> 1
        if heap[parent] <= key:
            break
        heap[i] = heap[parent]
        i = parent
    heap[i] = key


def _sift_down(heap, size, i):
    key = heap[i]
    while True:
        child = 2 * i + 1
        if child >= size:
            break
        if child + 1 < size and heap[child + 1] < heap[child]:
            child += 1
        if heap[child] >= key:
            break
        heap[i] = heap[child]
        i = child
    heap[i] = key


def _push(heap, size, key):
    heap[size] = key
    _sift_up(heap, size)
    return size + 1


def _pop(heap, size):
    top = heap[0]
    size -= 1
    if size > 0:
        heap[0] = heap[size]
        _sift_down(heap, size, 0)
    return top, size


def lexbfs(indptr, indices, init):
    """LexBFS by stable partition refinement.

    Ties go to the vertex that comes first in ``init``; each row of
    ``indices`` must list neighbours in ``init`` order so refinement keeps
    that order inside every class.  Classes are unlinked as soon as they
    empty and their ids reused, so class arrays stay of size ``n``.
    """
    n = init.shape[0]
    cap = n + 2
    vnext = np.full(n, -1, np.int64)
    vprev = np.full(n, -1, np.int64)
    vcls = np.zeros(n, np.int64)
    chead = np.full(cap, -1, np.int64)
    ctail = np.full(cap, -1, np.int64)
    cnext = np.full(cap, -1, np.int64)
    cprev = np.full(cap, -1, np.int64)
    split = np.full(cap, -1, np.int64)
    stamp = np.full(cap, -1, np.int64)
    spare = np.empty(cap, np.int64)
    nspare = 0
    visited = np.zeros(n, np.bool_)
    order = np.empty(n, np.int64)
    for i in range(n):
        v = init[i]
        if i == 0:
            chead[0] = v
        else:
            vnext[ctail[0]] = v
            vprev[v] = ctail[0]
        ctail[0] = v
    first = 0
    ncls = 1
    for step in range(n):
        c = first
        v = chead[c]
        chead[c] = vnext[v]
        if chead[c] == -1:
            ctail[c] = -1
            first = cnext[c]
            if first != -1:
                cprev[first] = -1
            spare[nspare] = c
            nspare += 1
        else:
            vprev[chead[c]] = -1
        visited[v] = True
        order[step] = v
        for e in range(indptr[v], indptr[v + 1]):
            w = indices[e]
            if visited[w]:
                continue
            cw = vcls[w]
            if stamp[cw] != step:
                stamp[cw] = step
                if nspare > 0:
                    nspare -= 1
                    nc = spare[nspare]
                else:
                    nc = ncls
                    ncls += 1
                stamp[nc] = -1
                chead[nc] = -1
                ctail[nc] = -1
                p = cprev[cw]
                cprev[nc] = p
                cnext[nc] = cw
                cprev[cw] = nc
                if p == -1:
                    first = nc
                else:
                    cnext[p] = nc
                split[cw] = nc
            nc = split[cw]
            a, b = vprev[w], vnext[w]
            if a == -1:
                chead[cw] = b
            else:
                vnext[a] = b
            if b == -1:
                ctail[cw] = a
            else:
                vprev[b] = a
            vnext[w] = -1
            vprev[w] = ctail[nc]
            if ctail[nc] == -1:
                chead[nc] = w
            else:
                vnext[ctail[nc]] = w
            ctail[nc] = w
            vcls[w] = nc
            if chead[cw] == -1:
                # cw emptied: nothing else of it comes this step
                p, q = cprev[cw], cnext[cw]
                if p == -1:
                    first = q
                else:
                    cnext[p] = q
                if q != -1:
                    cprev[q] = p
                spare[nspare] = cw
                nspare += 1
    return order


def rows_by_position(indptr, indices, order):
    """Adjacency of a symmetric CSR graph with every row listed in ``order`` order."""
    n = order.shape[0]
    fill = indptr[:-1].copy()
    out = np.empty_like(indices)
    for i in range(n):
        u = order[i]
        for e in range(indptr[u], indptr[u + 1]):
            w = indices[e]
            out[fill[w]] = u
            fill[w] += 1
    return out


def relabel(indptr, indices, order):
    """CSR of the same graph with ``order[i]`` renamed ``i``; rows come out sorted.

    Returns ``(indptr, indices, newid)`` where ``newid[v]`` is the new name of ``v``.
    """
    n = order.shape[0]
    newid = np.empty(n, np.int64)
    ptr = np.zeros(n + 1, np.int64)
    for i in range(n):
        u = order[i]
        newid[u] = i
        ptr[i + 1] = ptr[i] + indptr[u + 1] - indptr[u]
    fill = ptr[:-1].copy()
    out = np.empty_like(indices)
    for i in range(n):
        u = order[i]
        for e in range(indptr[u], indptr[u + 1]):
            j = newid[indices[e]]
            out[fill[j]] = i
            fill[j] += 1
    return ptr, out, newid


def _find(jump, j):
    root = j
    while jump[root] != root:
        root = jump[root]
    while jump[j] != root:
        nxt = jump[j]
        jump[j] = root
        j = nxt
    return root


def interval_order(indptr, indices, order):
    """Check that every vertex's later neighbours directly follow it in ``order``.

    Returns ``(ok, pos, reach)`` with ``pos``/``reach`` indexed by vertex;
    stops at the first violation.
    """
    n = order.shape[0]
    pos = np.empty(n, np.int64)
    for i in range(n):
        pos[order[i]] = i
    reach = np.empty(n, np.int64)
    for v in range(n):
        pv = pos[v]
        far = pv
        count = 0
        for e in range(indptr[v], indptr[v + 1]):
            pw = pos[indices[e]]
            if pw > pv:
                count += 1
                if pw > far:
                    far = pw
        if count != far - pv:
            return False, pos, reach
        reach[v] = far
    return True, pos, reach


def components(indptr, indices, gone):
    """Component ids of the graph minus ``gone`` (``-1`` there), numbered by smallest vertex."""
    n = gone.shape[0]
    comp = np.full(n, -1, np.int64)
    queue = np.empty(n, np.int64)
    count = 0
    for root in range(n):
        if gone[root] or comp[root] != -1:
            continue
        comp[root] = count
        queue[0] = root
        head, tail = 0, 1
        while head < tail:
            u = queue[head]
            head += 1
            for e in range(indptr[u], indptr[u + 1]):
                w = indices[e]
                if not gone[w] and comp[w] == -1:
                    comp[w] = count
                    queue[tail] = w
                    tail += 1
        count += 1
    return count, comp


def greedy_disjoint(start, end, order):
    """Size of the greedy set of pairwise disjoint ranges taken in ``order``."""
    count = 0
    reach = 0
    for i in range(order.shape[0]):
        v = order[i]
        if start[v] > reach:
            count += 1
            reach = end[v]
    return count


def clique_minima(start, end, s):
    """Smallest vertex of every clique ``1..s``: vertices paint unpainted cliques in index order."""
    n = start.shape[0]
    low = np.full(s + 2, -1, np.int64)
    jump = np.arange(s + 2)
    for v in range(n):
        j = _find(jump, start[v])
        while j <= end[v]:
            low[j] = v
            jump[j] = j + 1
            j = _find(jump, j + 1)
    return low[1 : s + 1]


def sweep_core(start, end, by_start, start_ptr, by_end, end_ptr, u1, p, s, audit):
    """The path-growing sweep for times ``1..s-1``.

    Returns the per-vertex trace arrays, the per-path first/last vertices and
    liveness, the deaths ``(t, pid, p_after)`` and, per time, the chosen path,
    its terminal end point and (with ``audit``) the smallest live terminal end.
    """
    n = start.shape[0]
    covered = np.zeros(n, np.bool_)
    act = np.full(n, -1, np.int64)
    deact = np.full(n, -1, np.int64)
    pred = np.full(n, -1, np.int64)
    succ = np.full(n, -1, np.int64)
    path_of = np.full(n, -1, np.int64)
    alive = np.ones(p, np.bool_)
    last = np.full(p, u1, np.int64)
    first = np.full(p, -1, np.int64)
    ev_t = np.empty(p, np.int64)
    ev_pid = np.empty(p, np.int64)
    ev_after = np.empty(p, np.int64)
    nev = 0
    chosen = np.full(s + 1, -1, np.int64)
    chosen_r = np.full(s + 1, -1, np.int64)
    lowest = np.full(s + 1, -1, np.int64)
    fail_time = -1

    kp = p + 1
    term = np.empty(p + 2 * n + s + 4, np.int64)
    nterm = 0
    kn = n + 1
    free = np.empty(n + 1, np.int64)
    nfree = 0
    due_head = np.full(s + 2, -1, np.int64)
    ent_next = np.empty(p + 2 * n + s + 4, np.int64)
    ent_pid = np.empty(p + 2 * n + s + 4, np.int64)
    nent = 0
    seen = np.full(p, -1, np.int64)
    waiting = np.empty(p, np.int64)

    covered[u1] = True
    act[u1] = 1
    for i in range(p):
        nterm = _push(term, nterm, end[u1] * kp + i)
        ent_pid[nent] = i
        ent_next[nent] = due_head[end[u1]]
        due_head[end[u1]] = nent
        nent += 1
    npaths = p

    for t in range(1, s):
        for k in range(start_ptr[t], start_ptr[t + 1]):
            v = by_start[k]
            if end[v] > t and not covered[v]:
                nfree = _push(free, nfree, end[v] * kn + v)
        while True:
            key = term[0]
            r = key // kp
            pid = key - r * kp
            if alive[pid] and end[last[pid]] == r:
                break
            key, nterm = _pop(term, nterm)
        chosen[t] = pid
        chosen_r[t] = r
        if audit:
            best = -1
            for i in range(p):
                if alive[i] and (best == -1 or end[last[i]] < best):
                    best = end[last[i]]
            lowest[t] = best
        grew = False
        for k in range(end_ptr[t], end_ptr[t + 1]):
            v = by_end[k]
            if covered[v]:
                continue
            tail = last[pid]
            if tail != u1:
                succ[tail] = v
            else:
                first[pid] = v
            if deact[tail] == -1:
                deact[tail] = t
            pred[v] = tail
            act[v] = t
            path_of[v] = pid
            covered[v] = True
            last[pid] = v
            grew = True
        if grew:
            ent_pid[nent] = pid
            ent_next[nent] = due_head[t]
            due_head[t] = nent
            nent += 1
            nterm = _push(term, nterm, t * kp + pid)
        nwait = 0
        e = due_head[t]
        while e != -1:
            i = ent_pid[e]
            if alive[i] and end[last[i]] == t and seen[i] != t:
                seen[i] = t
                waiting[nwait] = i
                nwait += 1
            e = ent_next[e]
        if nwait > 1:
            # mergesort: quicksort degrades on some of these orders
            waiting[:nwait] = waiting[:nwait][np.argsort(waiting[:nwait], kind="mergesort")]
        for w in range(nwait):
            pid = waiting[w]
            while nfree > 0 and covered[free[0] % kn]:
                key, nfree = _pop(free, nfree)
            if nfree > 0:
                key, nfree = _pop(free, nfree)
                r = key // kn
                v = key - r * kn
                tail = last[pid]
                if tail != u1:
                    succ[tail] = v
                else:
                    first[pid] = v
                if deact[tail] == -1:
                    deact[tail] = t
                pred[v] = tail
                act[v] = t
                path_of[v] = pid
                covered[v] = True
                last[pid] = v
                nterm = _push(term, nterm, r * kp + pid)
                ent_pid[nent] = pid
                ent_next[nent] = due_head[r]
                due_head[r] = nent
                nent += 1
            else:
                alive[pid] = False
                npaths -= 1
                ev_t[nev] = t
                ev_pid[nev] = pid
                ev_after[nev] = npaths
                nev += 1
                if npaths == 0:
                    fail_time = t
                    return (act, deact, pred, succ, path_of, alive, first, last,
                            ev_t[:nev], ev_pid[:nev], ev_after[:nev], chosen, chosen_r, lowest, fail_time)
    return (act, deact, pred, succ, path_of, alive, first, last,
            ev_t[:nev], ev_pid[:nev], ev_after[:nev], chosen, chosen_r, lowest, fail_time)


def depletion_core(start, end, act, deact, succ, s, t1):
    """Times ``t1 > t2 > ...`` of the witness walk; a negative entry flags a failed step.

    At time ``t`` the depleted vertex with the latest deactivation (largest
    end point among equals) is found with a max segment tree over
    deactivation times.
    """
    n = start.shape[0]
    best_end = np.zeros(s + 1, np.int64)
    owner = np.full(s + 1, -1, np.int64)
    for v in range(n):
        d = deact[v]
        if d != -1 and end[v] > best_end[d]:
            best_end[d] = end[v]
            owner[d] = v
    width = 1
    while width < s + 1:
        width *= 2
    tree = np.zeros(2 * width, np.int64)
    tree[width : width + s + 1] = best_end
    for i in range(width - 1, 0, -1):
        tree[i] = max(tree[2 * i], tree[2 * i + 1])
    times = np.empty(s + 1, np.int64)
    times[0] = t1
    k = 1
    t = t1
    st_node = np.empty(128, np.int64)
    st_lo = np.empty(128, np.int64)
    st_span = np.empty(128, np.int64)
    while True:
        # rightmost d <= t whose best end exceeds t
        d = -1
        st_node[0] = 1
        st_lo[0] = 0
        st_span[0] = width
        top = 1
        while top > 0:
            top -= 1
            node, lo, span = st_node[top], st_lo[top], st_span[top]
            if lo > t or tree[node] <= t:
                continue
            if span == 1:
                d = lo
                break
            half = span // 2
            st_node[top], st_lo[top], st_span[top] = 2 * node, lo, half
            st_node[top + 1], st_lo[top + 1], st_span[top + 1] = 2 * node + 1, lo + half, half
            top += 2
        if d == -1:
            return times[:k]
        x = succ[owner[d]]
        count = 0
        low = -1
        prev_low = -1
        lastv = -1
        while x != -1 and act[x] != -1 and act[x] <= t:
            prev_low = low
            if low == -1 or start[x] < low:
                low = start[x]
            lastv = x
            count += 1
            x = succ[x]
        if count > 0:
            dv = deact[lastv]
            if start[lastv] <= t < end[lastv] and act[lastv] <= t and (dv == -1 or dv > t):
                count -= 1
                low = prev_low
        if count == 0:
            times[k] = -t
            return times[: k + 1]
        nxt = low - 1
        if nxt < 1 or nxt >= t:
            times[k] = -t
            return times[: k + 1]
        times[k] = nxt
        k += 1
        t = nxt
