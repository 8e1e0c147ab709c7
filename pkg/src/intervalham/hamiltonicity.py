"""Hamiltonicity classification and constructive certificates for interval graphs.

Everything is driven by the scattering number: a connected interval graph is
traceable iff ``sc <= 1``, hamiltonian iff ``sc <= 0`` and k-Hamilton-connected
iff ``sc <= -(k+1)``.  Paths are built from the optimal u1-un stave by
merging; paths between arbitrary endpoints come from a spanning 3-stave.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .common import NEG_INF, NegInf
from .graph import Graph, components, induced_subgraph
from .model import CliquePathModel
from .scattering import ScatteringResult, min_path_cover, scattering_number
from .stave import merge

__all__ = [
    "HamiltonCertificate",
    "Classification",
    "Unknown",
    "InvalidPair",
    "Infeasible",
    "ConstructionError",
    "CertificateFormatError",
    "classify",
    "hamilton_path",
    "hamilton_cycle",
    "hamilton_path_between",
    "hamilton_path_avoiding",
    "path_cover_certificate",
    "verify_certificate",
    "certificate_to_json",
    "certificate_from_json",
]

KINDS = ("path", "cycle", "path-between", "stave", "path-cover")


class InvalidPair(ValueError):
    pass


class Infeasible(ValueError):
    """The vertex-deleted graph is not Hamilton-connected."""


class ConstructionError(AssertionError):
    """A construction step produced something that fails verification."""


class CertificateFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Unknown:
    """Answer for pairs in graphs with scattering number 0 or 1, where no decision is made."""

    scattering_number: int

    def __str__(self) -> str:
        return f"unknown (scattering number {self.scattering_number})"


@dataclass(frozen=True)
class HamiltonCertificate:
    """``vertices`` is a flat sequence for paths and cycles, a tuple of paths otherwise.

    Cycles list each vertex once; the closing edge is implied.  ``removed``
    holds the deleted set for paths in ``G - S``.
    """

    kind: str
    vertices: tuple
    endpoints: tuple[int, int] | None = None
    removed: frozenset = field(default_factory=frozenset)


@dataclass(frozen=True)
class Classification:
    scattering_number: int | NegInf
    traceable: bool
    hamiltonian: bool
    hamilton_connected: bool
    k_max: int | None
    complete: bool = False


def _sc(g: Graph) -> ScatteringResult:
    return scattering_number(g)


def classify(g: Graph, result: ScatteringResult | None = None) -> Classification:
    if result is None:
        result = _sc(g)
    sc = result.value
    if sc is NEG_INF:
        n = g.n
        return Classification(sc, True, n >= 3, True, n - 2 if n >= 2 else None, True)
    return Classification(sc, sc <= 1, sc <= 0, sc <= -1, -sc - 1 if sc <= -1 else None)


def _complete_path(g: Graph, v: int, w: int) -> list[int]:
    return [v] + [x for x in range(g.n) if x != v and x != w] + [w]


def _checked(g: Graph, cert: HamiltonCertificate) -> HamiltonCertificate:
    problems = verify_certificate(g, cert)
    if problems:
        raise ConstructionError("; ".join(problems))
    return cert


def hamilton_path(g: Graph, result: ScatteringResult | None = None) -> HamiltonCertificate | None:
    """A Hamilton path (u1 to un for non-complete graphs), or ``None`` if there is none."""
    if g.n == 1:
        return HamiltonCertificate("path", (0,))
    if result is None:
        result = _sc(g)
    if result.value is NEG_INF:
        return _checked(g, HamiltonCertificate("path", tuple(range(g.n))))
    if result.stave is None:
        return None
    model, paths = result.model, result.stave.paths
    return _checked(g, HamiltonCertificate("path", tuple(merge(model, paths[0], paths[1:]))))


def hamilton_cycle(g: Graph, result: ScatteringResult | None = None) -> HamiltonCertificate | None:
    """A Hamilton cycle built as ``P`` followed by ``Q`` reversed, or ``None``."""
    if g.n < 3:
        return None
    if result is None:
        result = _sc(g)
    if result.value is NEG_INF:
        return _checked(g, HamiltonCertificate("cycle", tuple(range(g.n))))
    if result.value > 0:
        return None
    model, paths = result.model, result.stave.paths
    second = merge(model, paths[1], paths[2:])
    cycle = list(paths[0]) + second[-2:0:-1]
    return _checked(g, HamiltonCertificate("cycle", tuple(cycle)))


def _three_stave(model: CliquePathModel, paths) -> list[list[int]]:
    third = merge(model, paths[2], paths[3:])
    return [list(paths[0]), list(paths[1]), third]


def _between(g: Graph, model: CliquePathModel, stave_paths, v: int, w: int) -> list[int]:
    u1, un = model.u1, model.un
    if v == un or w == u1:
        return _between(g, model, stave_paths, w, v)[::-1]
    three = _three_stave(model, stave_paths)
    where = {}
    for i, path in enumerate(three):
        for pos, x in enumerate(path[1:-1], 1):
            where[x] = (i, pos)

    if v == u1 and w == un:
        return merge(model, three[0], three[1:])

    if v == u1:
        i, pos = where[w]
        x = three[i]
        rest = [three[j] for j in range(3) if j != i]
        head = merge(model, rest[0], [rest[1], x[:pos]])
        return head + x[pos:-1][::-1]

    if w == un:
        i, pos = where[v]
        x = three[i]
        rest = [three[j] for j in range(3) if j != i]
        tail = merge(model, rest[0], [rest[1], x[pos + 1:]])
        return x[:pos + 1][::-1] + tail[1:]

    (i, pv), (j, pw) = where[v], where[w]
    if i != j:
        q, r = three[i], three[j]
        p = three[3 - i - j]
        q1, q2 = q[:pv + 1], q[pv + 1:]
        r1, r2 = r[:pw], r[pw:]
        middle = merge(model, p, [q2, r1])
        return q1[::-1] + middle[1:-1] + r2[::-1]

    if pv > pw:
        return _between(g, model, stave_paths, w, v)[::-1]
    x = three[i]
    others = [three[k] for k in range(3) if k != i]
    q1, q2, q3 = x[:pv + 1], x[pv + 1:pw], x[pw:]
    if not q2:
        middle = merge(model, others[0], [others[1]])
        return q1[::-1] + middle[1:-1] + q3[::-1]
    first = q2[0]
    for p, r in (others, others[::-1]):
        z = next((k for k, y in enumerate(r[:-1]) if g.has_edge(first, y)), None)
        if z is not None:
            break
    else:
        raise ConstructionError(f"no stave path dominates vertex {first}")
    r1 = r[:z + 1] + q2
    r2 = r[z + 1:]
    middle = merge(model, p, [r1, r2])
    return q1[::-1] + middle[1:-1] + q3[::-1]


def hamilton_path_between(
    g: Graph, v: int, w: int, result: ScatteringResult | None = None
) -> HamiltonCertificate | None | Unknown:
    """Hamilton path from ``v`` to ``w``.

    Decided for ``sc <= -1`` (always exists) and ``sc >= 2`` (never exists);
    returns :class:`Unknown` when ``sc`` is 0 or 1.
    """
    if not (0 <= v < g.n and 0 <= w < g.n) or v == w:
        raise InvalidPair(f"need two distinct vertices, got {v} and {w}")
    if result is None:
        result = _sc(g)
    sc = result.value
    if sc is NEG_INF:
        path = _complete_path(g, v, w)
    elif sc >= 2:
        return None
    elif sc >= 0:
        return Unknown(sc)
    else:
        path = _between(g, result.model, result.stave.paths, v, w)
    return _checked(g, HamiltonCertificate("path-between", tuple(path), (v, w)))


def hamilton_path_avoiding(g: Graph, S, v: int, w: int) -> HamiltonCertificate:
    """Hamilton path from ``v`` to ``w`` in ``g - S``; raises :class:`Infeasible` unless ``sc(g - S) <= -1``."""
    removed = frozenset(S)
    if v in removed or w in removed:
        raise InvalidPair("endpoints must not be removed")
    if any(not 0 <= x < g.n for x in removed):
        raise InvalidPair("removed vertex out of range")
    h, old = induced_subgraph(g, [x for x in range(g.n) if x not in removed])
    local = {x: i for i, x in enumerate(old)}
    if v not in local or w not in local or v == w:
        raise InvalidPair(f"need two distinct vertices, got {v} and {w}")
    if components(h)[0] > 1:
        raise Infeasible("graph minus S is disconnected")
    res = _sc(h)
    if res.value is not NEG_INF and res.value >= 0:
        raise Infeasible(f"graph minus S has scattering number {res.value}")
    cert = hamilton_path_between(h, local[v], local[w], res)
    lifted = HamiltonCertificate("path-between", tuple(old[x] for x in cert.vertices), (v, w), removed)
    return _checked(g, lifted)


def path_cover_certificate(g: Graph) -> HamiltonCertificate:
    return _checked(g, HamiltonCertificate("path-cover", min_path_cover(g).paths))


def _path_problems(g: Graph, seq, label: str) -> list[str]:
    out = []
    for a, b in zip(seq, seq[1:]):
        if not g.has_edge(a, b):
            out.append(f"{label}: {g.labels[a]}-{g.labels[b]} is not an edge")
    return out


def verify_certificate(g: Graph, cert: HamiltonCertificate) -> list[str]:
    """All violated certificate constraints, as messages; empty means valid."""
    if cert.kind not in KINDS:
        return [f"unknown kind {cert.kind!r}"]
    problems: list[str] = []
    alive = set(range(g.n)) - set(cert.removed)
    if cert.kind in ("stave", "path-cover"):
        paths = [tuple(p) for p in cert.vertices]
        if not paths or any(not p for p in paths):
            return ["empty path"]
        for idx, p in enumerate(paths):
            problems += _path_problems(g, p, f"path {idx}")
        if cert.kind == "stave":
            ends = {(p[0], p[-1]) for p in paths}
            if len(ends) != 1 or len(paths[0]) < 2:
                problems.append("stave paths do not share both endpoints")
            seq = [paths[0][0], paths[0][-1]] + [x for p in paths for x in p[1:-1]]
        else:
            seq = [x for p in paths for x in p]
    else:
        seq = list(cert.vertices)
        problems += _path_problems(g, seq, cert.kind)
        if cert.kind == "cycle":
            if len(seq) < 3:
                problems.append("cycle needs at least three vertices")
            elif not g.has_edge(seq[-1], seq[0]):
                problems.append(f"cycle: closing pair {g.labels[seq[-1]]}-{g.labels[seq[0]]} is not an edge")
        if cert.kind == "path-between":
            if cert.endpoints is None:
                problems.append("path-between without endpoints")
            elif not seq or (seq[0], seq[-1]) != tuple(cert.endpoints):
                problems.append("path endpoints do not match the requested pair")
    if any(not 0 <= x < g.n for x in seq):
        return problems + ["vertex out of range"]
    if len(seq) != len(set(seq)):
        problems.append("a vertex is visited more than once")
    if set(seq) != alive:
        missing = sorted(alive - set(seq))
        extra = sorted(set(seq) - alive)
        if missing:
            problems.append("missing vertices: " + " ".join(g.labels[x] for x in missing))
        if extra:
            problems.append("removed vertices visited: " + " ".join(g.labels[x] for x in extra))
    return problems


def certificate_to_json(cert: HamiltonCertificate, g: Graph) -> dict:
    lab = g.labels
    if cert.kind in ("stave", "path-cover"):
        verts = [[lab[x] for x in p] for p in cert.vertices]
    else:
        verts = [lab[x] for x in cert.vertices]
    out = {"kind": cert.kind, "vertices": verts}
    if cert.removed:
        out["removed"] = [lab[x] for x in sorted(cert.removed)]
    if cert.endpoints is not None:
        out["endpoints"] = [lab[x] for x in cert.endpoints]
    return out


def certificate_from_json(data: dict, g: Graph) -> HamiltonCertificate:
    """Inverse of :func:`certificate_to_json`; unknown labels raise :class:`CertificateFormatError`."""

    def idx(label):
        try:
            return g.index(str(label))
        except KeyError:
            raise CertificateFormatError(f"unknown vertex label {label!r}") from None

    try:
        kind = data["kind"]
        raw = data["vertices"]
    except (KeyError, TypeError):
        raise CertificateFormatError("certificate needs 'kind' and 'vertices'") from None
    if kind not in KINDS:
        raise CertificateFormatError(f"unknown kind {kind!r}")
    if kind in ("stave", "path-cover"):
        verts = tuple(tuple(idx(x) for x in p) for p in raw)
    else:
        verts = tuple(idx(x) for x in raw)
    ends = data.get("endpoints")
    return HamiltonCertificate(
        kind,
        verts,
        tuple(idx(x) for x in ends) if ends is not None else None,
        frozenset(idx(x) for x in data.get("removed", ())),
    )
