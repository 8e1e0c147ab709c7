"""Greedy left-to-right sweep for optimal spanning staves between u1 and un.

All paths grow from ``u1``.  At time ``t`` the path whose terminal expires
first swallows the vertices that leave the clique path at ``t``; then every
path whose terminal does not reach ``C_{t+1}`` takes the free separator vertex
that expires first, or dies.  The sweep touches each vertex a constant number
of times plus heap operations, so it is O(n log n) given the model.  The loop itself lives in
:mod:`intervalham._kernels`.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from . import _kernels
from .graph import Graph
from .model import CliquePathModel, model_from_ranges

__all__ = [
    "Stave",
    "PathSystem",
    "SweepTrace",
    "Decrement",
    "MergeInfeasible",
    "sweep",
    "run_sweep",
    "close_stave",
    "merge",
    "verify_stave",
    "dominates",
    "stave_to_json",
    "trace_to_json",
]


class MergeInfeasible(RuntimeError):
    """The paths handed to :func:`merge` admit no u1-un Hamilton path (a caller bug)."""


@dataclass(frozen=True)
class Stave:
    u1: int
    un: int
    paths: tuple[tuple[int, ...], ...]

    @property
    def p(self) -> int:
        return len(self.paths)


@dataclass
class PathSystem:
    """Paths of a sweep in progress: ``active`` keyed by path id, dead ones in ``finalized``."""

    active: dict[int, list[int]]
    finalized: list[list[int]] = field(default_factory=list)

    @property
    def p(self) -> int:
        return len(self.active)


@dataclass(frozen=True)
class Decrement:
    t: int
    path_id: int
    p_after: int


@dataclass
class SweepTrace:
    """Per-vertex activation/deactivation times and path links, plus path deaths.

    The per-vertex fields are integer arrays holding ``-1`` while undefined.
    ``u1`` and ``un`` belong to several paths, so their links stay ``-1``.
    ``chosen`` lists ``(t, path id, terminal end)`` per step; with ``audit``
    each entry also carries the smallest live terminal end at that step.
    """

    activated: np.ndarray
    deactivated: np.ndarray
    pred: np.ndarray
    succ: np.ndarray
    path_of: np.ndarray
    p_initial: int
    events: list[Decrement] = field(default_factory=list)
    chosen: list[tuple] = field(default_factory=list)
    success: bool = False
    p_final: int = 0
    fail_time: int | None = None
    start: Sequence[int] = ()
    end: Sequence[int] = ()

    def state_at(self, v: int, t: int) -> str:
        """Status of ``v`` during the open time interval ``(t, t+1)``.

        ``"outside"`` when the interval of ``v`` does not cover ``(t, t+1)``.
        """
        if not self.start[v] <= t < self.end[v]:
            return "outside"
        a, d = self.activated[v], self.deactivated[v]
        if a == -1 or a > t:
            return "free"
        if d == -1 or d > t:
            return "active"
        return "depleted"


def _buckets(keys: np.ndarray, s: int) -> tuple[np.ndarray, np.ndarray]:
    """Vertices grouped by key in index order, with ``ptr[t]..ptr[t+1]`` for key ``t``."""
    order = np.argsort(keys, kind="stable")
    ptr = np.zeros(s + 2, dtype=np.int64)
    np.cumsum(np.bincount(keys, minlength=s + 1)[: s + 1], out=ptr[1:])
    return order.astype(np.int64), ptr


def _sweep_arrays(model: CliquePathModel, p: int | None, audit: bool):
    """Run the sweep kernel; returns the trace and the kernel's path arrays."""
    n, s = model.n, model.s
    if s < 2:
        raise ValueError("sweep needs at least two maximal cliques")
    start, end = model.start_array, model.end_array
    if p is None:
        p = int(np.count_nonzero(start == 1)) - 1
    by_start, start_ptr = _buckets(start, s)
    by_end, end_ptr = _buckets(end, s)
    kernel = _kernels.pick("sweep_core", n)
    (act, deact, pred, succ, path_of, alive, first, last,
     ev_t, ev_pid, ev_after, chosen, chosen_r, lowest, fail_time) = kernel(
        start, end, by_start, start_ptr, by_end, end_ptr, model.u1, p, s, audit)
    trace = SweepTrace(act, deact, pred, succ, path_of, p, start=start, end=end)
    trace.events = [Decrement(t, i, a) for t, i, a in zip(ev_t.tolist(), ev_pid.tolist(), ev_after.tolist())]
    steps = np.flatnonzero(chosen >= 0)
    if audit:
        trace.chosen = list(zip(steps.tolist(), chosen[steps].tolist(), chosen_r[steps].tolist(), lowest[steps].tolist()))
    else:
        trace.chosen = list(zip(steps.tolist(), chosen[steps].tolist(), chosen_r[steps].tolist()))
    trace.fail_time = None if fail_time < 0 else int(fail_time)
    return trace, alive, first


def _path(u1: int, first: int, succ) -> list[int]:
    path = [u1]
    x = first
    while x != -1:
        path.append(int(x))
        x = succ[x]
    return path


def run_sweep(model: CliquePathModel, p: int | None = None, audit: bool = False) -> tuple[PathSystem, SweepTrace]:
    """Main loop of the sweep (times ``1..s-1``); stops early when no path survives.

    ``p`` defaults to the number of vertices in ``C_1`` other than ``u1``,
    which is ``deg(u1)``.
    """
    trace, alive, first = _sweep_arrays(model, p, audit)
    succ = trace.succ.tolist()
    first = first.tolist()
    system = PathSystem({int(i): _path(model.u1, first[i], succ) for i in np.flatnonzero(alive)})
    system.finalized = [_path(model.u1, first[e.path_id], succ) for e in trace.events]
    return system, trace


def close_stave(model: CliquePathModel, system: PathSystem, trace: SweepTrace | None = None) -> Stave:
    """Finish a completed main loop into a spanning stave.

    The lowest-numbered surviving path takes the uncovered vertices of
    ``C_s`` (ending at ``un``) and absorbs all dead paths; every other path
    is closed with ``un``.
    """
    if not system.active:
        raise ValueError("no surviving path to close")
    s, un = model.s, model.un
    if trace is not None:
        uncovered = trace.activated == -1
    else:
        uncovered = np.ones(model.n, dtype=bool)
        for path in list(system.active.values()) + system.finalized:
            uncovered[path] = False
    uncovered[un] = False
    tail = np.flatnonzero(uncovered & (model.end_array == s)).tolist() + [un]
    pid = min(system.active)
    main = system.active[pid] + tail
    if trace is not None:
        prev = system.active[pid][-1]
        if trace.deactivated[prev] == -1:
            trace.deactivated[prev] = s
        for v in tail:
            trace.activated[v] = s
            if v != un:
                trace.path_of[v] = pid
    if system.finalized:
        main = merge(model, main, system.finalized)
    paths = [tuple(main)]
    for i in sorted(system.active):
        if i != pid:
            paths.append(tuple(system.active[i]) + (un,))
    return Stave(model.u1, un, tuple(paths))


def sweep(model: CliquePathModel, p: int | None = None, audit: bool = False) -> tuple[Stave | None, SweepTrace]:
    """Optimal spanning stave between ``u1`` and ``un``, or ``None`` if none exists.

    ``p`` overrides the initial number of paths (default ``deg(u1)``).
    """
    system, trace = run_sweep(model, p, audit)
    if not system.active:
        return None, trace
    stave = close_stave(model, system, trace)
    trace.success = True
    trace.p_final = stave.p
    return stave, trace


def _submodel(model: CliquePathModel, vertices: Sequence[int]) -> tuple[CliquePathModel, list[int]]:
    keep = np.unique(np.asarray(vertices, dtype=np.int64))
    sub = model_from_ranges(model.start_array[keep], model.end_array[keep])
    u1 = int(np.searchsorted(keep, model.u1))
    un = int(np.searchsorted(keep, model.un))
    moved = replace(sub, u1=u1, un=un)
    moved.__dict__["start_array"] = sub.start_array
    moved.__dict__["end_array"] = sub.end_array
    return moved, keep.tolist()


def merge(model: CliquePathModel, path: Sequence[int], others: Sequence[Sequence[int]] = ()) -> list[int]:
    """One u1-un path on the vertices of ``path`` and ``others``.

    ``path`` runs from ``u1`` to ``un``; each of ``others`` has ``u1`` or
    ``un`` as an end and they meet ``path`` only there.  The union induces an
    interval graph with a Hamilton path, so the single-path sweep on its
    clique path finds one from ``u1`` to ``un``.
    """
    if not others:
        return list(path)
    if path[0] != model.u1 or path[-1] != model.un:
        raise MergeInfeasible("main path must run from u1 to un")
    vertices = list(path)
    for q in others:
        vertices.extend(q)
    sub, keep = _submodel(model, vertices)
    if sub.s == 1:
        inner = [i for i in range(sub.n) if i not in (sub.u1, sub.un)]
        return [keep[i] for i in [sub.u1, *inner, sub.un]]
    system, trace = run_sweep(sub, 1)
    if not system.active:
        raise MergeInfeasible("union of the paths has no u1-un Hamilton path")
    result = close_stave(sub, system, trace).paths[0]
    return [keep[i] for i in result]


def dominates(g: Graph, vertices) -> bool:
    dom = bytearray(g.n)
    for v in vertices:
        dom[v] = 1
        for w in g.adjacency[v]:
            dom[w] = 1
    return all(dom)


def verify_stave(g: Graph, stave: Stave, spanning: bool = True) -> list[str]:
    """Structural check of a stave: endpoints, edges, internal disjointness, coverage."""
    out: list[str] = []
    seen: dict[int, int] = {}
    for i, path in enumerate(stave.paths):
        if len(path) < 2 or path[0] != stave.u1 or path[-1] != stave.un:
            out.append(f"path {i} does not run between the stave endpoints")
            continue
        for a, b in zip(path, path[1:]):
            if not g.has_edge(a, b):
                out.append(f"path {i}: {g.labels[a]}-{g.labels[b]} is not an edge")
        for v in path[1:-1]:
            if v in (stave.u1, stave.un) or v in seen:
                out.append(f"vertex {g.labels[v]} repeated across or within paths")
            seen[v] = i
    if len(stave.paths) != len(set(stave.paths)):
        out.append("stave lists the same path twice")
    if spanning:
        covered = set(seen) | {stave.u1, stave.un}
        if len(covered) != g.n:
            out.append(f"stave covers {len(covered)} of {g.n} vertices")
    return out


def stave_to_json(stave: Stave, g: Graph) -> dict:
    return {"p": stave.p, "paths": [[g.labels[v] for v in path] for path in stave.paths]}


def trace_to_json(trace: SweepTrace, g: Graph) -> dict:
    lab = g.labels
    name = lambda v: None if v < 0 else lab[v]  # noqa: E731
    time = lambda x: None if x < 0 else int(x)  # noqa: E731
    return {
        "vertices": {
            lab[v]: {
                "a": time(trace.activated[v]),
                "d": time(trace.deactivated[v]),
                "pred": name(trace.pred[v]),
                "succ": name(trace.succ[v]),
            }
            for v in range(len(lab))
        },
        "events": [{"t": e.t, "path": e.path_id, "p": e.p_after} for e in trace.events],
        "success": trace.success,
        "p": trace.p_final,
    }
