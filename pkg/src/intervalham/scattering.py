"""Scattering number, scattering-set witnesses and minimum path covers.

For a connected non-complete interval graph the sweep's optimal stave size
``p*`` gives ``sc(G) = 2 - p*``.  When the sweep dies (no Hamilton path), the
graph is joined with ``j`` universal vertices: the join has scattering number
``sc(G) - j`` and is traceable as soon as ``j >= pi(G) - 1``.  Taking ``j``
one less than the independence number is always enough, so one sweep on the
join recovers ``sc(G) = pi(G)`` and a second, with ``j = pi(G) - 1``, yields a
Hamilton path that breaks into a minimum path cover.

Witness sets are read off the sweep trace by walking back through depleted
vertices, and every witness is recounted with :func:`components` before it
is returned.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .common import NEG_INF, NegInf
from .graph import Graph, components, induced_subgraph
from .model import CliquePathModel, add_universal, build_model
from .stave import Stave, SweepTrace, _sweep_arrays, merge, sweep

__all__ = [
    "ScatteringWitness",
    "ScatteringResult",
    "PathCover",
    "WitnessMismatch",
    "NoDecrementEvent",
    "depletion_times",
    "extract_witness",
    "best_witness",
    "scattering_number",
    "min_path_cover",
    "witness_value",
    "witness_to_json",
]


class WitnessMismatch(AssertionError):
    """No candidate set attains the scattering number the sweep proved."""


class NoDecrementEvent(ValueError):
    pass


@dataclass(frozen=True)
class ScatteringWitness:
    S: frozenset
    value: int
    components: int
    provenance: str


@dataclass(frozen=True)
class ScatteringResult:
    """``value`` is an int or :data:`NEG_INF`; ``witness`` is ``None`` only for complete graphs.

    For connected non-complete inputs ``model`` is the clique path and
    ``stave`` the optimal u1-un stave (``None`` when the graph is not
    traceable, in which case ``p_star`` is 0).  ``p_star`` is ``None`` when
    there is nothing to sweep: disconnected input or a single clique.
    """

    value: int | NegInf
    witness: ScatteringWitness | None
    model: CliquePathModel | None = None
    stave: Stave | None = None
    trace: SweepTrace | None = None

    @property
    def p_star(self) -> int | None:
        if self.model is None or self.model.s == 1:
            return None
        return self.stave.p if self.stave is not None else 0


@dataclass(frozen=True)
class PathCover:
    paths: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.paths)


def witness_value(g: Graph, S) -> tuple[int, int]:
    """``(c(G-S) - |S|, c(G-S))`` recomputed from scratch."""
    c, _ = components(g, S)
    return c - len(S), c


def depletion_times(model: CliquePathModel, trace: SweepTrace, t1: int) -> list[int]:
    """Times ``t_1 > t_2 > ... > t_k`` obtained by stepping back through depleted vertices.

    At time ``t`` the depleted vertex ``u`` with the latest deactivation is
    taken; its descendants on its path (dropping the last one when it is still
    active) all start after some time ``t'``, and ``t'`` is the next time.
    The walk stops once nothing is depleted during ``(t, t+1)``.
    """
    kernel = _kernels.pick("depletion_core", model.n)
    times = kernel(model.start_array, model.end_array, trace.activated, trace.deactivated, trace.succ, model.s, t1)
    if times[-1] < 0:
        raise WitnessMismatch(f"step back from time {-times[-1]} failed")
    return times.tolist()


def extract_witness(model: CliquePathModel, trace: SweepTrace, t1: int | None = None) -> frozenset:
    """Union of the separators ``C_t ∩ C_{t+1}`` over :func:`depletion_times`.

    ``t1`` defaults to the time of the last path death in ``trace``.
    """
    if t1 is None:
        if not trace.events:
            raise NoDecrementEvent("sweep trace records no path death")
        t1 = trace.events[-1].t
    marks = np.zeros(model.s + 1, dtype=np.int64)
    marks[depletion_times(model, trace, t1)] = 1
    np.cumsum(marks, out=marks)
    start, end = model.start_array, model.end_array
    hit = marks[end - 1] - marks[start - 1] > 0
    return frozenset(np.flatnonzero(hit).tolist())


def best_witness(g: Graph, model: CliquePathModel, trace: SweepTrace, p_star: int, extra: int = 0) -> ScatteringWitness:
    """First of the trace-derived set, ``N(u1)`` and ``N(un)`` reaching ``2 - p* + extra``.

    ``extra`` counts universal vertices the model carries beyond ``g`` (indices
    ``>= g.n``); they are dropped from every candidate before counting.
    """
    target = 2 - p_star + extra
    best = None
    for how in ("depletion", "N(u1)", "N(un)"):
        if how == "depletion":
            if not trace.events:
                continue
            S = frozenset(v for v in extract_witness(model, trace) if v < g.n)
        else:
            S = frozenset(g.adjacency[model.u1 if how == "N(u1)" else model.un])
        value, c = witness_value(g, S)
        if c >= 2 and (best is None or value > best.value):
            best = ScatteringWitness(S, value, c, how)
        if best is not None and best.value >= target:
            break
    if best is None or best.value != target:
        got = None if best is None else best.value
        raise WitnessMismatch(f"best candidate reaches {got}, expected {target}")
    return best


def _independence(model: CliquePathModel) -> int:
    """Largest set of pairwise disjoint ranges (earliest end first)."""
    order = np.argsort(model.end_array, kind="stable")
    kernel = _kernels.pick("greedy_disjoint", model.n)
    return int(kernel(model.start_array, model.end_array, order.astype(np.int64)))


def _join_sweep(model: CliquePathModel, extra: int):
    """Sweep on the join with ``extra`` universal vertices; returns ``(p*, trace, augmented model)``."""
    aug = add_universal(model, extra)
    trace, alive, _ = _sweep_arrays(aug, None, False)
    p_star = int(np.count_nonzero(alive))
    if p_star == 0:
        raise WitnessMismatch(f"join with {extra} universal vertices is still not traceable")
    return p_star, trace, aug


def _connected(g: Graph, model: CliquePathModel | None = None) -> ScatteringResult:
    if model is None:
        model = build_model(g)
    if g.is_complete():
        return ScatteringResult(NEG_INF, None, model)
    stave, trace = sweep(model)
    if stave is not None:
        witness = best_witness(g, model, trace, stave.p)
        return ScatteringResult(2 - stave.p, witness, model, stave, trace)
    # a path cover never needs more paths than an independent set has vertices
    extra = _independence(model) - 1
    p_star, jtrace, aug = _join_sweep(model, extra)
    witness = best_witness(g, aug, jtrace, p_star, extra)
    return ScatteringResult(witness.value, witness, model, None, trace)


def scattering_number(g: Graph) -> ScatteringResult:
    """Scattering number of an interval graph together with a verified witness set.

    Raises :class:`~intervalham.model.NotInterval` for non-interval input.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    count, comp = components(g)
    if count == 1:
        return _connected(g)
    total = 0
    S: set[int] = set()
    for part in _parts(g, count, comp):
        h, old = induced_subgraph(g, part)
        res = _connected(h) if h.n > 1 else None
        if res is None or res.value is NEG_INF or res.value <= 1:
            total += 1
        else:
            total += res.value
            S.update(old[v] for v in res.witness.S)
    value, c = witness_value(g, S)
    if value != total:
        raise WitnessMismatch(f"assembled witness reaches {value}, expected {total}")
    return ScatteringResult(total, ScatteringWitness(frozenset(S), value, c, "components"))


def _parts(g, count, comp):
    parts: list[list[int]] = [[] for _ in range(count)]
    for v in range(g.n):
        parts[comp[v]].append(v)
    return parts


def _cover_connected(g: Graph, model: CliquePathModel) -> list[list[int]]:
    if model.s == 1:
        return [[model.u1] + [v for v in range(g.n) if v != model.u1]] if g.n > 1 else [[0]]
    stave, _ = sweep(model)
    if stave is not None:
        return [merge(model, stave.paths[0], stave.paths[1:])]
    extra = _independence(model) - 1
    p_star, _, _ = _join_sweep(model, extra)
    pi = extra + 2 - p_star
    aug = add_universal(model, pi - 1)
    joined, _ = sweep(aug)
    if joined is None:
        raise WitnessMismatch(f"join with {pi - 1} universal vertices is not traceable")
    ham = merge(aug, joined.paths[0], joined.paths[1:])
    pieces: list[list[int]] = []
    run: list[int] = []
    for v in ham:
        if v >= g.n:
            if run:
                pieces.append(run)
            run = []
        else:
            run.append(v)
    if run:
        pieces.append(run)
    if len(pieces) != pi:
        raise WitnessMismatch(f"join Hamilton path split into {len(pieces)} paths, expected {pi}")
    return pieces


def min_path_cover(g: Graph) -> PathCover:
    """Minimum path cover of an interval graph (one path per component at least)."""
    if g.n == 0:
        return PathCover(())
    count, comp = components(g)
    paths: list[tuple[int, ...]] = []
    for part in _parts(g, count, comp):
        h, old = induced_subgraph(g, part)
        if h.n == 1:
            paths.append((old[0],))
            continue
        for path in _cover_connected(h, build_model(h)):
            paths.append(tuple(old[v] for v in path))
    return PathCover(tuple(paths))


def witness_to_json(result: ScatteringResult, g: Graph) -> dict:
    w = result.witness
    return {
        "scattering_number": "-inf" if result.value is NEG_INF else result.value,
        "set": [] if w is None else [g.labels[v] for v in sorted(w.S)],
        "components_after_removal": components(g)[0] if w is None else w.components,
    }
