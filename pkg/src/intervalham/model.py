"""Interval graph recognition and the clique-path model.

Recognition first tries a few LexBFS+ sweeps: an order in which the later
neighbours of every vertex are exactly the next few vertices is an interval
realization in itself.  If no sweep yields such an order, the exact route runs
one LexBFS, reads the maximal cliques off the perfect elimination ordering
and arranges them by partition refinement.  Whatever comes out is checked by
:func:`verify_model`, so an accepted model is always a correct one.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from . import _kernels
from .graph import Graph, components

__all__ = [
    "CliquePathModel",
    "NotInterval",
    "Disconnected",
    "lex_bfs",
    "build_model",
    "model_from_intervals",
    "model_from_ranges",
    "add_universal",
    "clique_range_union",
    "separator",
    "verify_model",
    "model_to_json",
]


class NotInterval(Exception):
    """The graph is not an interval graph; ``reason`` says which check failed."""

    def __init__(self, reason: str):
        super().__init__(f"not an interval graph: {reason}")
        self.reason = reason


class Disconnected(ValueError):
    pass


@dataclass(frozen=True)
class CliquePathModel:
    """Clique path ``C_1..C_s`` stored as per-vertex clique ranges.

    ``start[v]`` and ``end[v]`` are 1-based clique indices, so ``v`` belongs to
    exactly ``C_start[v] .. C_end[v]``.  ``u1`` lives only in ``C_1`` and
    ``un`` only in ``C_s``.  The clique lists are derived on first access.
    """

    start: tuple[int, ...]
    end: tuple[int, ...]
    u1: int
    un: int
    s: int

    @property
    def n(self) -> int:
        return len(self.start)

    @cached_property
    def cliques(self) -> tuple[tuple[int, ...], ...]:
        members: list[list[int]] = [[] for _ in range(self.s)]
        for v in range(self.n):
            for j in range(self.start[v] - 1, self.end[v]):
                members[j].append(v)
        return tuple(tuple(c) for c in members)

    def clique(self, j: int) -> tuple[int, ...]:
        return self.cliques[j - 1]

    @cached_property
    def start_array(self) -> np.ndarray:
        return np.asarray(self.start, dtype=np.int64)

    @cached_property
    def end_array(self) -> np.ndarray:
        return np.asarray(self.end, dtype=np.int64)


def add_universal(model: CliquePathModel, count: int) -> CliquePathModel:
    """Model of the join with ``count`` new vertices spanning every clique.

    New vertices get indices ``n .. n+count-1``; ``u1`` and ``un`` stay.
    """
    if model.s < 2:
        raise ValueError("needs at least two cliques")
    return CliquePathModel(
        model.start + (1,) * count, model.end + (model.s,) * count, model.u1, model.un, model.s
    )


def lex_bfs(adj: Sequence[Sequence[int]]) -> list[int]:
    """Lexicographic breadth-first search by partition refinement.

    Returns the visiting order.  Ties are broken by taking the most recently
    inserted vertex of the leading block, which keeps the order deterministic.
    """
    n = len(adj)
    if n == 0:
        return []
    members: list[list[int]] = [list(range(n - 1, -1, -1))]
    block = [0] * n
    pos = list(range(n - 1, -1, -1))
    nxt = [-1]
    prv = [-1]
    head = 0
    visited = bytearray(n)
    order = []
    for _ in range(n):
        while not members[head]:
            head = nxt[head]
            prv[head] = -1
        v = members[head].pop()
        visited[v] = 1
        order.append(v)
        fresh = {}
        for w in adj[v]:
            if visited[w]:
                continue
            bw = block[w]
            nb = fresh.get(bw)
            if nb is None:
                nb = len(members)
                members.append([])
                p = prv[bw]
                prv.append(p)
                nxt.append(bw)
                prv[bw] = nb
                if p == -1:
                    head = nb
                else:
                    nxt[p] = nb
                fresh[bw] = nb
            lst = members[bw]
            i = pos[w]
            last = lst.pop()
            if last != w:
                lst[i] = last
                pos[last] = i
            dst = members[nb]
            pos[w] = len(dst)
            dst.append(w)
            block[w] = nb
    return order


def _cliques_from_peo(adj, order):
    """Maximal cliques and clique-tree edges of a chordal graph.

    ``order`` is a LexBFS order, so its reverse is a perfect elimination
    ordering exactly when the graph is chordal.  Raises :class:`NotInterval`
    on a chordality violation.
    """
    n = len(adj)
    rank = [0] * n
    for i, v in enumerate(order):
        rank[v] = i
    earlier = [None] * n
    parent = [-1] * n
    children: list[list[int]] = [[] for _ in range(n)]
    for v in order:
        rv = rank[v]
        e = [w for w in adj[v] if rank[w] < rv]
        earlier[v] = e
        if e:
            p = max(e, key=rank.__getitem__)
            parent[v] = p
            children[p].append(v)
    mark = [-1] * n
    for p in order:
        if not children[p]:
            continue
        for w in earlier[p]:
            mark[w] = p
        mark[p] = p
        for v in children[p]:
            for w in earlier[v]:
                if mark[w] != p:
                    raise NotInterval("graph is not chordal")

    home = [-1] * n
    contents: list[list[int]] = []
    tree_parent: list[int] = []
    for v in order:
        e = earlier[v]
        if not e:
            home[v] = len(contents)
            contents.append([v])
            tree_parent.append(-1)
            continue
        c = home[parent[v]]
        if len(e) == len(contents[c]):
            contents[c].append(v)
            home[v] = c
        else:
            home[v] = len(contents)
            contents.append(e + [v])
            tree_parent.append(c)
    return contents, tree_parent, rank


def _order_cliques(n, contents, rank):
    """Arrange maximal cliques so every vertex occupies a consecutive run.

    Classes of cliques form an ordered partition that is refined until every
    class is a singleton.  A pivot vertex whose cliques meet several classes
    pulls its cliques together.  When no pivot is pending, every class is an
    independent subproblem whose private vertices form a module; the clique of
    the last such vertex in LexBFS order is an end clique of that subproblem
    and is split off.
    """
    s = len(contents)
    vcl: list[list[int]] = [[] for _ in range(n)]
    for c, members in enumerate(contents):
        for v in members:
            vcl[v].append(c)

    cls_of = [0] * s
    classes: list[set] = [set(range(s))]
    nxt = [-1]
    prv = [-1]
    big = {0} if s > 1 else set()
    processed = bytearray(n)
    queued = bytearray(n)
    queue: deque[int] = deque()
    by_rank = sorted(range(n), key=rank.__getitem__)
    cursor = n - 1

    def new_class(members, before=None, after=None):
        k = len(classes)
        classes.append(members)
        if after is not None:
            nx = nxt[after]
            prv.append(after)
            nxt.append(nx)
            nxt[after] = k
            if nx != -1:
                prv[nx] = k
        else:
            pv = prv[before]
            prv.append(pv)
            nxt.append(before)
            prv[before] = k
            if pv != -1:
                nxt[pv] = k
        for c in members:
            cls_of[c] = k
        return k

    def enqueue_from(part):
        for c in part:
            for u in contents[c]:
                if not processed[u] and not queued[u]:
                    queued[u] = 1
                    queue.append(u)

    def split(x_cls, part, side):
        """Move ``part`` (a proper subset) out of class ``x_cls`` to ``side``."""
        rest = classes[x_cls]
        rest.difference_update(part)
        part = set(part)
        if side == "after":
            k = new_class(part, after=x_cls)
        else:
            k = new_class(part, before=x_cls)
        for cid in (x_cls, k):
            if len(classes[cid]) > 1:
                big.add(cid)
            else:
                big.discard(cid)
        enqueue_from(part if len(part) <= len(rest) else rest)

    def own_class(v):
        c0 = cls_of[vcl[v][0]]
        for c in vcl[v]:
            if cls_of[c] != c0:
                return -1
        return c0

    while big:
        if queue:
            x = queue.popleft()
            queued[x] = 0
            if processed[x]:
                continue
            count: dict[int, int] = {}
            for c in vcl[x]:
                k = cls_of[c]
                count[k] = count.get(k, 0) + 1
            if len(count) < 2:
                continue
            processed[x] = 1
            firsts = [k for k in count if prv[k] not in count]
            lasts = [k for k in count if nxt[k] not in count]
            if len(firsts) != 1 or len(lasts) != 1:
                raise NotInterval("cliques of a vertex cannot be made consecutive")
            first, last = firsts[0], lasts[0]
            k = nxt[first]
            while k != last:
                if count[k] != len(classes[k]):
                    raise NotInterval("cliques of a vertex cannot be made consecutive")
                k = nxt[k]
            if count[first] != len(classes[first]):
                split(first, [c for c in vcl[x] if cls_of[c] == first], "after")
            if count[last] != len(classes[last]):
                split(last, [c for c in vcl[x] if cls_of[c] == last], "before")
        else:
            while cursor >= 0:
                z = by_rank[cursor]
                k = own_class(z)
                if k != -1 and len(classes[k]) > 1:
                    break
                cursor -= 1
            if cursor < 0:
                raise NotInterval("no end clique available")
            if len(vcl[z]) != 1:
                raise NotInterval("last private vertex of a class is not simplicial")
            split(k, [vcl[z][0]], "after")

    head = next(k for k in range(len(classes)) if prv[k] == -1)
    order = []
    while head != -1:
        (c,) = classes[head]
        order.append(c)
        head = nxt[head]
    return order


def _canonical_orientation(cliques):
    rev = cliques[::-1]
    key = [len(c) for c in cliques], [c[0] for c in cliques]
    rkey = [len(c) for c in rev], [c[0] for c in rev]
    return rev if rkey < key else cliques


def _assemble(n, cliques) -> CliquePathModel:
    start = [0] * n
    end = [0] * n
    for j, c in enumerate(cliques, 1):
        for v in c:
            if start[v] == 0:
                start[v] = j
            end[v] = j
    s = len(cliques)
    if s == 1:
        members = cliques[0]
        u1 = members[0]
        un = members[1] if len(members) > 1 else members[0]
    else:
        u1 = min(v for v in cliques[0] if end[v] == 1)
        un = min(v for v in cliques[-1] if start[v] == s)
    model = CliquePathModel(tuple(start), tuple(end), u1, un, s)
    model.__dict__["cliques"] = tuple(cliques)
    return model


def build_model(g: Graph) -> CliquePathModel:
    """Recognize ``g`` and return its canonical clique-path model.

    Raises :class:`NotInterval` when ``g`` is not an interval graph and
    :class:`Disconnected` when it is not connected.
    """
    if g.n == 0:
        raise ValueError("empty graph has no clique path")
    count, _ = components(g)
    if count != 1:
        raise Disconnected(f"graph has {count} components; split it first")
    if g.n > 1:
        model = _model_by_sweeps(g)
        if model is not None:
            return model
    adj = g.adjacency
    order = lex_bfs(adj)
    contents, _, rank = _cliques_from_peo(adj, order)
    arranged = _order_cliques(g.n, contents, rank)
    cliques = _canonical_orientation([tuple(sorted(contents[c])) for c in arranged])
    model = _assemble(g.n, cliques)
    problems = verify_model(g, model)
    if problems:
        raise NotInterval(problems[0])
    return model


MAX_SWEEPS = 6


def _model_by_sweeps(g: Graph) -> CliquePathModel | None:
    indptr, indices = g.csr
    if np.any(np.diff(indptr) == 0):
        return None
    lexbfs = _kernels.pick("lexbfs", g.n)
    by_position = _kernels.pick("rows_by_position", g.n)
    check = _kernels.pick("interval_order", g.n)
    init = np.arange(g.n, dtype=np.int64)
    order = lexbfs(indptr, by_position(indptr, indices, init), init)
    # LexBFS+ only looks at positions, so later sweeps can run on the graph
    # renamed along the first order, where neighbours sit close in memory
    indptr, indices, newid = _kernels.pick("relabel", g.n)(indptr, indices, order)
    order = init
    for sweep in range(MAX_SWEEPS):
        if sweep:
            order = lexbfs(indptr, by_position(indptr, indices, init), init)
        for cand in (order, order[::-1]):
            ok, pos, reach = check(indptr, indices, cand)
            if ok:
                model = _oriented(_from_ranges(pos[newid], reach[newid]))
                if not verify_model(g, model):
                    return model
        init = order[::-1].copy()
    return None


def _from_ranges(lo, hi) -> tuple[np.ndarray, np.ndarray, int]:
    """Clique ranges of an interval realization with integer end points."""
    lo = np.asarray(lo, dtype=np.int64)
    hi = np.asarray(hi, dtype=np.int64)
    if np.any(lo > hi):
        raise ValueError("interval with start after end")
    coords, inv = np.unique(np.concatenate([lo, hi]), return_inverse=True)
    n = len(lo)
    starts = np.bincount(inv[:n], minlength=len(coords))
    ends = np.bincount(inv[n:], minlength=len(coords))
    alive = np.cumsum(starts - ends)
    if np.any(alive[:-1] == 0):
        raise Disconnected("intervals do not form a connected graph")
    # a clique sits at an end coordinate reached after a start since the previous one
    with_end = np.flatnonzero(ends)
    seen = np.cumsum(starts)[with_end]
    fresh = np.diff(np.concatenate([[0], seen])) > 0
    points = coords[with_end[fresh]]
    start = np.searchsorted(points, lo, side="left") + 1
    end = np.searchsorted(points, hi, side="right")
    return start, end, len(points)


def _oriented(ranges) -> CliquePathModel:
    """Model with the lexicographically smaller of the two clique-path directions."""
    start, end, s = ranges
    if s > 1:
        sizes = np.cumsum(np.bincount(start, minlength=s + 2) - np.bincount(end + 1, minlength=s + 2))[1 : s + 1]
        flip = _compare(sizes[::-1], sizes)
        if flip == 0:
            low = _kernels.pick("clique_minima", len(start))(start, end, s)
            flip = _compare(low[::-1], low)
        if flip < 0:
            start, end = s + 1 - end, s + 1 - start
    return _with_ends(start, end, s)


def _compare(a, b) -> int:
    diff = np.flatnonzero(a != b)
    if len(diff) == 0:
        return 0
    return -1 if a[diff[0]] < b[diff[0]] else 1


def _with_ends(start, end, s) -> CliquePathModel:
    n = len(start)
    if s == 1:
        u1, un = 0, (1 if n > 1 else 0)
    else:
        u1 = int(np.flatnonzero(end == 1)[0])
        un = int(np.flatnonzero(start == s)[0])
    model = CliquePathModel(tuple(start.tolist()), tuple(end.tolist()), u1, un, s)
    model.__dict__["start_array"] = start
    model.__dict__["end_array"] = end
    return model


def model_from_intervals(intervals: Sequence[tuple[int, int]]) -> CliquePathModel:
    """Clique-path model read directly off an interval realization.

    The realization must give a connected graph.  Maximal cliques sit at the
    coordinates where an interval ends after some interval started since the
    previous such coordinate.  No canonical orientation is applied; ``u1`` and
    ``un`` are the smallest-index vertices private to the end cliques.
    """
    if len(intervals) == 0:
        raise ValueError("no intervals")
    arr = np.asarray(intervals, dtype=np.int64).reshape(-1, 2)
    return _with_ends(*_from_ranges(arr[:, 0], arr[:, 1]))


def model_from_ranges(lo, hi) -> CliquePathModel:
    """Like :func:`model_from_intervals`, from separate start and end arrays."""
    return _with_ends(*_from_ranges(lo, hi))


def clique_range_union(model: CliquePathModel, j: int, k: int) -> frozenset[int]:
    """Vertices of ``C_j ∪ ... ∪ C_k`` (1-based, inclusive)."""
    if not 1 <= j <= k <= model.s:
        raise IndexError(f"clique range [{j}, {k}] outside 1..{model.s}")
    out: set[int] = set()
    for c in model.cliques[j - 1:k]:
        out.update(c)
    return frozenset(out)


def separator(model: CliquePathModel, t: int) -> frozenset[int]:
    """``C_t ∩ C_{t+1}``: vertices whose clique range covers both ``t`` and ``t+1``."""
    if not 1 <= t <= model.s - 1:
        raise IndexError(f"separator index {t} outside 1..{model.s - 1}")
    return frozenset(v for v in model.cliques[t - 1] if model.end[v] >= t + 1)


def verify_model(g: Graph, model: CliquePathModel) -> list[str]:
    """Check every clique-path invariant against ``g``; returns the violations found."""
    n, s = g.n, model.s
    out: list[str] = []
    if model.n != n:
        return [f"model has {model.n} vertices, graph has {n}"]
    if s == 0:
        return ["model has no cliques"]
    start, end = model.start_array, model.end_array
    bad = np.flatnonzero((start < 1) | (start > end) | (end > s))
    if len(bad):
        return [f"vertex {g.labels[v]} has invalid range [{start[v]}, {end[v]}]" for v in bad[:5].tolist()]
    if "cliques" in model.__dict__:
        # cliques were supplied rather than derived from the ranges
        for j, c in enumerate(model.cliques, 1):
            if len(set(c)) != len(c):
                out.append(f"clique {j} lists a vertex twice")
            for v in c:
                if not start[v] <= j <= end[v]:
                    out.append(f"vertex {g.labels[v]} in clique {j} outside its range [{start[v]}, {end[v]}]")
        total = sum(len(c) for c in model.cliques)
        if total != int(np.sum(end - start + 1)):
            out.append("clique memberships are not the contiguous ranges [start, end]")
    indptr, cols = g.csr
    rows = np.repeat(np.arange(n), np.diff(indptr))
    apart = (start[rows] > end[cols]) | (start[cols] > end[rows])
    for e in np.flatnonzero(apart & (rows < cols))[:5].tolist():
        u, v = int(rows[e]), int(cols[e])
        out.append(f"edge {g.labels[u]}-{g.labels[v]} lies in no common clique")
    ends_before = np.cumsum(np.bincount(end + 1, minlength=s + 2))
    disjoint = int(np.sum(ends_before[start]))
    intersecting = n * (n - 1) // 2 - disjoint
    if intersecting != g.m:
        out.append(f"{intersecting} intersecting range pairs but {g.m} edges")
    has_end = np.bincount(end, minlength=s + 2) > 0
    has_start = np.bincount(start, minlength=s + 2) > 0
    for j in np.flatnonzero(~(has_end[1:s] & has_start[2 : s + 1]))[:5].tolist():
        out.append(f"cliques {j + 1} and {j + 2} are nested, so one is not maximal")
    if s > 1:
        if not (start[model.u1] == end[model.u1] == 1):
            out.append(f"u1 = {g.labels[model.u1]} is not exclusive to the first clique")
        if not (start[model.un] == end[model.un] == s):
            out.append(f"un = {g.labels[model.un]} is not exclusive to the last clique")
    return out


def model_to_json(model: CliquePathModel, g: Graph) -> dict:
    lab = g.labels
    return {
        "s": model.s,
        "cliques": [[lab[v] for v in c] for c in model.cliques],
        "intervals": {lab[v]: [model.start[v], model.end[v]] for v in range(model.n)},
        "u1": lab[model.u1],
        "un": lab[model.un],
    }
