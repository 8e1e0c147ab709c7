"""Exponential-time reference answers for small graphs.

Everything here works on vertex bitmasks and exists to cross-check the
linear-time routines; each function enforces a hard size cap.
"""

from __future__ import annotations

from itertools import combinations

from .common import NEG_INF, TooLarge
from .graph import Graph

__all__ = [
    "oracle_scattering_number",
    "oracle_scattering_set",
    "oracle_max_stave",
    "oracle_hamilton",
    "oracle_min_path_cover",
    "oracle_k_hamilton_connected",
]


def _cap(g: Graph, limit: int):
    if g.n > limit:
        raise TooLarge(f"oracle limited to {limit} vertices, got {g.n}")


def _masks(g: Graph) -> list[int]:
    out = []
    for nb in g.adjacency:
        m = 0
        for w in nb:
            m |= 1 << w
        out.append(m)
    return out


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _count_components(adj: list[int], alive: int) -> int:
    count = 0
    rest = alive
    while rest:
        seen = rest & -rest
        frontier = seen
        while frontier:
            grow = 0
            for v in _bits(frontier):
                grow |= adj[v]
            frontier = grow & rest & ~seen
            seen |= frontier
        rest &= ~seen
        count += 1
    return count


def oracle_scattering_set(g: Graph):
    """``(sc(G), S)`` by trying every vertex set; ``(NEG_INF, None)`` for complete graphs."""
    _cap(g, 20)
    if g.is_complete():
        return NEG_INF, None
    adj = _masks(g)
    full = (1 << g.n) - 1
    best, best_set = None, None
    for removed in range(full):
        c = _count_components(adj, full & ~removed)
        if c >= 2:
            value = c - bin(removed).count("1")
            if best is None or value > best:
                best, best_set = value, removed
    return best, frozenset(_bits(best_set))


def oracle_scattering_number(g: Graph):
    return oracle_scattering_set(g)[0]


def _reach(adj: list[int], n: int, starts: int) -> list[int]:
    """``reach[mask]``: ends of paths that cover exactly ``mask`` and begin in ``starts``."""
    reach = [0] * (1 << n)
    for v in _bits(starts):
        reach[1 << v] = 1 << v
    for mask in range(1, 1 << n):
        ends = reach[mask]
        if not ends:
            continue
        grow = 0
        for e in _bits(ends):
            grow |= adj[e]
        for u in _bits(grow & ~mask):
            reach[mask | (1 << u)] |= 1 << u
    return reach


def oracle_hamilton(g: Graph, mode: str = "path", v: int | None = None, w: int | None = None) -> bool:
    """Hamilton path / cycle / path between ``v`` and ``w``, decided exactly."""
    _cap(g, 12)
    n = g.n
    adj = _masks(g)
    full = (1 << n) - 1
    if mode == "path":
        return n == 0 or bool(_reach(adj, n, full)[full])
    if mode == "cycle":
        if n < 3:
            return False
        return bool(_reach(adj, n, 1)[full] & adj[0])
    if mode == "between":
        if v is None or w is None or v == w:
            raise ValueError("between mode needs two distinct vertices")
        return bool(_reach(adj, n, 1 << v)[full] >> w & 1)
    raise ValueError(f"unknown mode {mode!r}")


def oracle_max_stave(g: Graph, v: int, w: int) -> int:
    """Largest ``p`` with a spanning ``p``-stave between ``v`` and ``w`` (0 if none).

    The inner vertices are split into blocks, each traversed by one path
    whose ends touch ``v`` and ``w``; the edge ``vw``, when present, adds one
    more path.
    """
    _cap(g, 12)
    if v == w:
        raise ValueError("stave endpoints must differ")
    n = g.n
    adj = _masks(g)
    direct = 1 if adj[v] >> w & 1 else 0
    inner = ((1 << n) - 1) & ~(1 << v) & ~(1 << w)
    if not inner:
        return direct
    reach = _reach(adj, n, adj[v] & inner)
    good = [bool(reach[x] & adj[w]) if x & ~inner == 0 else False for x in range(1 << n)]
    best = {0: 0}

    def solve(x):
        if x in best:
            return best[x]
        low = x & -x
        rest = x ^ low
        top = -1
        sub = rest
        while True:
            y = sub | low
            if good[y]:
                r = solve(x ^ y)
                if r >= 0 and r + 1 > top:
                    top = r + 1
            if sub == 0:
                break
            sub = (sub - 1) & rest
        best[x] = top
        return top

    blocks = solve(inner)
    return blocks + direct if blocks > 0 else 0


def oracle_min_path_cover(g: Graph) -> int:
    """Fewest vertex-disjoint paths covering ``g``."""
    _cap(g, 12)
    n = g.n
    if n == 0:
        return 0
    adj = _masks(g)
    reach = _reach(adj, n, (1 << n) - 1)
    best = [0] + [n + 1] * ((1 << n) - 1)
    for x in range(1, 1 << n):
        low = x & -x
        rest = x ^ low
        sub = rest
        top = n + 1
        while True:
            y = sub | low
            if reach[y] and best[x ^ y] + 1 < top:
                top = best[x ^ y] + 1
            if sub == 0:
                break
            sub = (sub - 1) & rest
        best[x] = top
    return best[-1]


def _hamilton_connected(adj: list[int], alive: int) -> bool:
    verts = list(_bits(alive))
    k = len(verts)
    if k <= 1:
        return True
    local = {v: i for i, v in enumerate(verts)}
    ladj = []
    for v in verts:
        m = 0
        for u in _bits(adj[v] & alive):
            m |= 1 << local[u]
        ladj.append(m)
    full = (1 << k) - 1
    for i in range(k):
        ends = _reach(ladj, k, 1 << i)[full]
        if ends | (1 << i) != full:
            return False
    return True


def oracle_k_hamilton_connected(g: Graph, k: int) -> bool:
    """Whether ``g - S`` is Hamilton-connected for every ``|S| <= k``.

    At least two vertices must remain, so ``k > n - 2`` answers ``False``.
    """
    _cap(g, 10)
    if k < 0 or k > 2:
        raise ValueError("oracle handles 0 <= k <= 2")
    n = g.n
    if k > n - 2:
        return False
    adj = _masks(g)
    full = (1 << n) - 1
    for size in range(k + 1):
        for removed in combinations(range(n), size):
            mask = full
            for v in removed:
                mask &= ~(1 << v)
            if not _hamilton_connected(adj, mask):
                return False
    return True
