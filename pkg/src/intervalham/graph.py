"""Undirected simple graphs on dense 0-based vertex indices, plus text parsing."""

from __future__ import annotations

from bisect import bisect_left
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import chain
from typing import Iterable, Sequence

import numpy as np

from . import _kernels

__all__ = [
    "Graph",
    "GraphFormatError",
    "parse_graph",
    "serialize_edge_list",
    "intervals_to_graph",
    "components",
    "is_clique",
    "induced_subgraph",
]


class GraphFormatError(ValueError):
    """Raised for malformed graph input (bad line, bad index, duplicate edge...)."""


@dataclass(frozen=True)
class Graph:
    """Immutable adjacency-list graph.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``; ``labels[v]``
    is the external name used in all JSON output.
    """

    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    _index: dict = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(self.labels) != len(self.adjacency):
            raise ValueError("labels and adjacency differ in length")
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(self.labels)})
        if len(self._index) != len(self.labels):
            raise ValueError("vertex labels must be unique")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None) -> Graph:
        adj: list[list[int]] = [[] for _ in range(n)]
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"vertex index out of range in edge ({u}, {v})")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphFormatError(f"duplicate edge ({u}, {v})")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        if labels is None:
            labels = [str(i) for i in range(n)]
        return cls(tuple(tuple(sorted(a)) for a in adj), tuple(str(x) for x in labels))

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @cached_property
    def m(self) -> int:
        return sum(map(len, self.adjacency)) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nb in enumerate(self.adjacency) for v in nb if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.adjacency[u]
        i = bisect_left(nb, v)
        return i < len(nb) and nb[i] == v

    def index(self, label) -> int:
        """Internal index of an external label (accepts ``str`` or ``int`` labels)."""
        try:
            return self._index[str(label)]
        except KeyError:
            raise KeyError(f"unknown vertex label {label!r}") from None

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Adjacency in CSR form: ``(indptr, indices)``, rows sorted."""
        n = self.n
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum([len(a) for a in self.adjacency], out=indptr[1:])
        indices = np.fromiter(chain.from_iterable(self.adjacency), dtype=np.int64, count=int(indptr[-1]))
        return indptr, indices

    @cached_property
    def _split(self) -> tuple[int, tuple[int, ...]]:
        count, comp = _components(self, ())
        return count, tuple(comp)

    def is_complete(self) -> bool:
        n = self.n
        return all(len(a) == n - 1 for a in self.adjacency)


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _parse_edge_list(text: str) -> Graph:
    lines = [(no, _strip(raw)) for no, raw in enumerate(text.splitlines(), 1)]
    lines = [(no, ln) for no, ln in lines if ln]
    if not lines:
        raise GraphFormatError("missing header line 'n m'")
    no, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise GraphFormatError(f"line {no}: header must be 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(f"line {no}: non-integer header {header!r}") from None
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {no}: negative n or m")
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for no, ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {no}: expected 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {no}: non-integer vertex in {ln!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {no}: vertex index out of range in {ln!r}")
        edges.append((u, v))
    try:
        return Graph.from_edges(n, edges)
    except GraphFormatError as exc:
        raise GraphFormatError(str(exc)) from None


def _parse_intervals(text: str) -> tuple[Graph, list[tuple[int, int]]]:
    labels: list[str] = []
    intervals: list[tuple[int, int]] = []
    for no, raw in enumerate(text.splitlines(), 1):
        ln = _strip(raw)
        if not ln:
            continue
        parts = ln.split()
        if len(parts) != 3:
            raise GraphFormatError(f"line {no}: expected 'label start end', got {ln!r}")
        try:
            lo, hi = int(parts[1]), int(parts[2])
        except ValueError:
            raise GraphFormatError(f"line {no}: non-integer endpoint in {ln!r}") from None
        if lo > hi:
            raise GraphFormatError(f"line {no}: interval start {lo} > end {hi}")
        labels.append(parts[0])
        intervals.append((lo, hi))
    if len(set(labels)) != len(labels):
        raise GraphFormatError("duplicate interval label")
    return intervals_to_graph(intervals, labels), intervals


def intervals_to_graph(intervals: Sequence[tuple[int, int]], labels: Sequence[str] | None = None) -> Graph:
    """Intersection graph of closed intervals, built by a left-to-right sweep."""
    order = sorted(range(len(intervals)), key=lambda i: intervals[i][0])
    active: list[int] = []
    edges = []
    for i in order:
        lo = intervals[i][0]
        active = [j for j in active if intervals[j][1] >= lo]
        edges.extend((j, i) for j in active)
        active.append(i)
    return Graph.from_edges(len(intervals), edges, labels)


def parse_graph(text: str, format: str = "edge-list") -> Graph:
    """Parse ``text`` in ``"edge-list"`` or ``"interval-endpoints"`` format."""
    if format == "edge-list":
        return _parse_edge_list(text)
    if format in ("interval-endpoints", "intervals"):
        return _parse_intervals(text)[0]
    raise ValueError(f"unknown graph format {format!r}")


def serialize_edge_list(g: Graph) -> str:
    """Canonical edge-list text: header, then edges sorted with ``u < v``."""
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def components(g: Graph, removed: Iterable[int] = ()) -> tuple[int, list[int]]:
    """Connected components of ``g - removed``.

    Returns ``(count, comp)`` where ``comp[v]`` is the component id of ``v``,
    or ``-1`` when ``v`` was removed.  Ids follow the smallest vertex of each
    component.
    """
    removed = tuple(removed)
    if not removed:
        count, comp = g._split
        return count, list(comp)
    return _components(g, removed)


def _components(g: Graph, removed) -> tuple[int, list[int]]:
    if g.n >= _kernels.JIT_CUTOFF:
        return _components_arrays(g, removed)
    comp = [-1] * g.n
    gone = bytearray(g.n)
    for v in removed:
        gone[v] = 1
    count = 0
    adj = g.adjacency
    for root in range(g.n):
        if gone[root] or comp[root] != -1:
            continue
        comp[root] = count
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not gone[w] and comp[w] == -1:
                    comp[w] = count
                    queue.append(w)
        count += 1
    return count, comp


def _components_arrays(g: Graph, removed) -> tuple[int, list[int]]:
    gone = np.zeros(g.n, dtype=np.bool_)
    gone[np.fromiter(removed, dtype=np.int64, count=len(removed))] = True
    indptr, indices = g.csr
    count, comp = _kernels.pick("components", g.n)(indptr, indices, gone)
    return int(count), comp.tolist()


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    members = sorted(set(s))
    for i, u in enumerate(members):
        nb = set(g.adjacency[u])
        if any(v not in nb for v in members[i + 1:]):
            return False
    return True


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``keep``; returns it with the new-to-old index map."""
    old = sorted(set(keep))
    new_of = {v: i for i, v in enumerate(old)}
    adj = tuple(tuple(new_of[w] for w in g.adjacency[v] if w in new_of) for v in old)
    return Graph(adj, tuple(g.labels[v] for v in old)), old
