"""Interval graph generators: exhaustive small cases, seeded random, named families."""

from __future__ import annotations

import itertools
from functools import lru_cache

import networkx as nx
import numpy as np

from .common import TooLarge
from .graph import Graph, components, induced_subgraph, intervals_to_graph

__all__ = [
    "clique_path_realizations",
    "gen_exhaustive",
    "gen_random",
    "gen_family",
    "largest_component",
    "format_intervals",
]

MAX_EXHAUSTIVE = 8


def clique_path_realizations(n: int):
    """Every multiset of ``n`` integer intervals that is a clique-path model.

    Points ``1..s`` are the maximal cliques: each point after the first starts
    an interval, each point before the last ends one, and some interval
    crosses every gap (connectivity).  Every connected interval graph on ``n``
    vertices arises at least once.
    """
    for s in range(1, n + 1):
        yield from _realize(s, 1, n, (), ())


def _realize(s, t, left, pending, acc):
    if t > s:
        if left == 0 and not pending:
            yield acc
        return
    if t == s:
        # every open interval must end here, and new ones are single points
        if all(e == s for e in pending):
            for j in range(1, left + 1):
                if j == left:
                    yield acc + ((s, s),) * j
        return
    for j in range(1, left - (s - t) + 1):
        for ends in itertools.combinations_with_replacement(range(t, s + 1), j):
            every = pending + ends
            if t not in every or max(every) <= t:
                continue
            still = tuple(sorted(e for e in every if e > t))
            yield from _realize(s, t + 1, left - j, still, acc + tuple((t, e) for e in ends))


@lru_cache(maxsize=None)
def _exhaustive(n: int):
    buckets: dict[str, list[nx.Graph]] = {}
    out = []
    for intervals in clique_path_realizations(n):
        intervals = sorted(intervals)
        g = intervals_to_graph(intervals)
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(g.edges())
        key = nx.weisfeiler_lehman_graph_hash(h, iterations=5)
        same = buckets.setdefault(key, [])
        if any(nx.vf2pp_is_isomorphic(h, other) for other in same):
            continue
        same.append(h)
        out.append((g, tuple(intervals)))
    return tuple(out)


def gen_exhaustive(n: int):
    """Connected interval graphs on ``n`` vertices, one per isomorphism class.

    Yields ``(graph, intervals)``; vertex ``i`` is realized by ``intervals[i]``.
    """
    if n > MAX_EXHAUSTIVE:
        raise TooLarge(f"exhaustive generation limited to n <= {MAX_EXHAUSTIVE}")
    if n < 1:
        return iter(())
    return iter(_exhaustive(n))


def gen_random(n: int, degree: float = 4.0, seed: int = 0, connected: bool = False):
    """Random interval graph with about ``degree`` expected neighbours per vertex.

    Starts are uniform on ``[0, 2n)`` and lengths uniform on
    ``[0, 2*degree]``.  The graph need not be connected unless ``connected``
    is set, in which case every gap in the union of the intervals is closed
    by stretching the interval that reaches furthest right before it.
    """
    rng = np.random.default_rng(seed)
    lo = rng.integers(0, 2 * n, size=n)
    hi = lo + rng.integers(0, int(2 * degree) + 1, size=n)
    if connected and n > 1:
        order = np.argsort(lo, kind="stable")
        reach = order[0]
        for v in order[1:].tolist():
            if hi[reach] < lo[v]:
                hi[reach] = lo[v]
            if hi[v] > hi[reach]:
                reach = v
    intervals = list(zip(lo.tolist(), hi.tolist()))
    return intervals_to_graph(intervals), intervals


def largest_component(g: Graph, intervals=None):
    """Largest connected component (ties: lowest component id), with its intervals."""
    count, comp = components(g)
    if count <= 1:
        return g, intervals
    sizes = np.bincount(np.asarray(comp), minlength=count)
    big = int(np.argmax(sizes))
    keep = [v for v in range(g.n) if comp[v] == big]
    h, old = induced_subgraph(g, keep)
    return h, None if intervals is None else [intervals[v] for v in old]


def gen_family(name: str, n: int):
    """Named families: path, star, complete, nested, onion.

    ``nested`` stacks concentric intervals (a complete graph whose model has
    one clique); ``onion`` alternates concentric layers with unit intervals
    tucked between consecutive layer starts.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if name == "path":
        intervals = [(i, i + 1) for i in range(n)]
    elif name == "star":
        intervals = [(0, 2 * n)] + [(2 * i, 2 * i) for i in range(1, n)]
    elif name == "complete":
        intervals = [(0, 1)] * n
    elif name == "nested":
        intervals = [(i, 2 * n - i) for i in range(n)]
    elif name == "onion":
        intervals = []
        for i in range(n):
            if i % 2 == 0:
                intervals.append((2 * i, 4 * n - 2 * i))
            else:
                intervals.append((2 * i - 1, 2 * i - 1))
    else:
        raise ValueError(f"unknown family {name!r}")
    return intervals_to_graph(intervals), intervals


def format_intervals(g: Graph, intervals) -> str:
    return "".join(f"{g.labels[v]} {lo} {hi}\n" for v, (lo, hi) in enumerate(intervals))
