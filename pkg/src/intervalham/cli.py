"""Command line interface: ``intervalham {analyze,certify,verify,gen,bench}``.

Exit codes: 0 ok, 1 verification failure, 2 unreadable input or not an
interval graph, 3 undecided (scattering number 0 or 1), 4 internal error.
"""

from __future__ import annotations

import argparse
import json
import resource
import statistics
import sys
import time

from .common import NEG_INF
from .generators import format_intervals, gen_family, gen_random
from .graph import GraphFormatError, components, parse_graph, serialize_edge_list
from .hamiltonicity import (
    CertificateFormatError,
    ConstructionError,
    HamiltonCertificate,
    Infeasible,
    InvalidPair,
    Unknown,
    certificate_from_json,
    certificate_to_json,
    classify,
    hamilton_cycle,
    hamilton_path,
    hamilton_path_avoiding,
    hamilton_path_between,
    path_cover_certificate,
    verify_certificate,
)
from .model import NotInterval, build_model
from .scattering import WitnessMismatch, scattering_number
from .stave import MergeInfeasible, sweep

OK, VIOLATION, BAD_INPUT, UNKNOWN, INTERNAL = 0, 1, 2, 3, 4
ORACLE_CAP = 20
CERT_KINDS = ("path", "cycle", "path-between", "path-cover", "stave")


class _Fail(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _load(path, fmt):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        return parse_graph(text, fmt)
    except OSError as exc:
        raise _Fail(BAD_INPUT, f"cannot read {path}: {exc.strerror or exc}") from None
    except (GraphFormatError, ValueError) as exc:
        raise _Fail(BAD_INPUT, f"parse error: {exc}") from None


def _emit(obj):
    print(json.dumps(obj, indent=2, sort_keys=True))


def _sc_json(value):
    return "-inf" if value is NEG_INF else value


def _vertex(g, label):
    try:
        return g.index(label)
    except KeyError:
        raise _Fail(BAD_INPUT, f"unknown vertex label {label!r}") from None


def _report(g, fmt_timing):
    t0 = time.perf_counter()
    count, _ = components(g)
    result = scattering_number(g)
    cls = classify(g, result)
    elapsed = time.perf_counter() - t0
    rep = {
        "n": g.n,
        "m": g.m,
        "interval": True,
        "components": count,
        "s": result.model.s if result.model is not None else None,
        "scattering_number": _sc_json(result.value),
        "scattering_set": [] if result.witness is None else [g.labels[v] for v in sorted(result.witness.S)],
        "p_star": result.p_star,
        "classification": {
            "traceable": cls.traceable,
            "hamiltonian": cls.hamiltonian,
            "hamilton_connected": cls.hamilton_connected,
            "k_max": cls.k_max,
            "complete": cls.complete,
        },
    }
    if fmt_timing:
        rep["seconds"] = round(elapsed, 6)
    return rep, result


def cmd_analyze(args):
    g = _load(args.file, args.format)
    if g.n == 0:
        raise _Fail(BAD_INPUT, "empty graph")
    rep, result = _report(g, args.timing)
    code = OK
    if args.oracle:
        if g.n > ORACLE_CAP:
            rep["oracle"] = f"skipped (n > {ORACLE_CAP})"
        else:
            from .oracle import oracle_scattering_number

            expected = oracle_scattering_number(g)
            agree = expected == result.value
            rep["oracle"] = {"scattering_number": _sc_json(expected), "agrees": agree}
            if not agree:
                code = VIOLATION
    if args.cert_kind:
        certs = {}
        for kind in args.cert_kind:
            cert = _certificate(g, kind, None, [], result)
            certs[kind] = None if not isinstance(cert, HamiltonCertificate) else certificate_to_json(cert, g)
        rep["certificates"] = certs
    if args.json:
        _emit(rep)
    else:
        for key in ("n", "m", "components", "s", "scattering_number", "p_star"):
            print(f"{key}: {rep[key]}")
        print("scattering_set:", " ".join(rep["scattering_set"]) or "(none)")
        for key, val in rep["classification"].items():
            print(f"{key}: {val}")
        if "oracle" in rep:
            print("oracle:", rep["oracle"])
        for kind, cert in rep.get("certificates", {}).items():
            print(f"{kind}:", "none" if cert is None else " ".join(map(str, cert["vertices"])))
        if "seconds" in rep:
            print(f"seconds: {rep['seconds']}")
    return code


def _certificate(g, kind, pair, remove, result=None):
    if kind in ("path-between",) and pair is None:
        raise _Fail(BAD_INPUT, "path-between needs --pair V W")
    if remove and kind != "path-between":
        raise _Fail(BAD_INPUT, "--remove only applies to path-between")
    if kind == "path-cover":
        return path_cover_certificate(g)
    if components(g)[0] > 1:
        return None
    if result is None:
        result = scattering_number(g)
    if kind == "path":
        return hamilton_path(g, result)
    if kind == "cycle":
        return hamilton_cycle(g, result)
    if kind == "stave":
        if result.stave is None:
            return None
        return HamiltonCertificate("stave", result.stave.paths)
    v, w = (_vertex(g, x) for x in pair)
    try:
        if remove:
            return hamilton_path_avoiding(g, [_vertex(g, x) for x in remove], v, w)
        return hamilton_path_between(g, v, w, result)
    except InvalidPair as exc:
        raise _Fail(BAD_INPUT, f"invalid pair: {exc}") from None
    except Infeasible as exc:
        return exc


def cmd_certify(args):
    g = _load(args.file, args.format)
    if g.n == 0:
        raise _Fail(BAD_INPUT, "empty graph")
    cert = _certificate(g, args.cert_kind, args.pair, args.remove or [])
    if isinstance(cert, Unknown):
        print(str(cert), file=sys.stderr)
        _emit({"kind": args.cert_kind, "exists": None, "reason": str(cert)})
        return UNKNOWN
    if isinstance(cert, Infeasible):
        _emit({"kind": args.cert_kind, "exists": False, "reason": str(cert)})
        return OK
    if cert is None:
        _emit({"kind": args.cert_kind, "exists": False})
        return OK
    problems = verify_certificate(g, cert)
    if problems:
        raise _Fail(INTERNAL, "emitted certificate fails verification: " + "; ".join(problems))
    _emit(certificate_to_json(cert, g))
    return OK


def cmd_verify(args):
    g = _load(args.graph, args.format)
    try:
        with open(args.certificate, encoding="utf-8") as fh:
            data = json.load(fh)
        cert = certificate_from_json(data, g)
    except OSError as exc:
        raise _Fail(BAD_INPUT, f"cannot read {args.certificate}: {exc.strerror or exc}") from None
    except (json.JSONDecodeError, CertificateFormatError) as exc:
        print(f"violation: {exc}")
        return VIOLATION
    problems = verify_certificate(g, cert)
    if problems:
        for p in problems:
            print(f"violation: {p}")
        return VIOLATION
    print("ok")
    return OK


def cmd_gen(args):
    if args.family == "random":
        g, intervals = gen_random(args.n, args.degree, args.seed, connected=args.connected)
    else:
        g, intervals = gen_family(args.family, args.n)
    if args.format == "edge-list":
        sys.stdout.write(serialize_edge_list(g))
    else:
        sys.stdout.write(format_intervals(g, intervals))
    return OK


def _peak_mb():
    # ru_maxrss is kilobytes on Linux
    return resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / 1024.0


def cmd_bench(args):
    try:
        sizes = [int(float(x)) for x in args.sizes.split(",")]
    except ValueError:
        raise _Fail(BAD_INPUT, f"bad --sizes {args.sizes!r}") from None
    if args.runs < 1:
        raise _Fail(BAD_INPUT, "--runs must be positive")
    # compile the kernels before anything is timed
    warm, _ = gen_random(5000, args.degree, args.seed, connected=True)
    classify(warm, scattering_number(warm))
    rows = []
    prev = None
    for n in sizes:
        stages = []
        for run in range(args.runs):
            g, _ = gen_random(n, args.degree, args.seed + run, connected=True)
            t0 = time.perf_counter()
            model = build_model(g)
            t1 = time.perf_counter()
            sweep(model)
            t2 = time.perf_counter()
            classify(g, scattering_number(g))
            t3 = time.perf_counter()
            stages.append((t1 - t0, t2 - t1, t3 - t2))
        build, swp, total = (statistics.median(col) for col in zip(*stages))
        row = {
            "n": g.n,
            "m": g.m,
            "build_model": round(build, 4),
            "sweep": round(swp, 4),
            "total": round(total, 4),
            "peak_mb": round(_peak_mb(), 1),
            "ratio": None,
        }
        if prev is not None and prev["total"] > 0:
            row["ratio"] = round(row["total"] / prev["total"], 2)
        rows.append(row)
        prev = row
    if args.json:
        _emit(rows)
    else:
        head = ("n", "m", "build_model", "sweep", "total", "peak_mb", "ratio")
        print(" ".join(f"{h:>11}" for h in head))
        for row in rows:
            print(" ".join(f"{'-' if row[h] is None else row[h]:>11}" for h in head))
    return OK


def build_parser():
    parser = argparse.ArgumentParser(prog="intervalham", description="Scattering number and Hamiltonicity of interval graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p, name="file"):
        p.add_argument(name, help="graph file, or - for stdin")
        p.add_argument("--format", default="edge-list", choices=["edge-list", "interval-endpoints"])

    p = sub.add_parser("analyze", help="scattering number, witness and classification")
    graph_input(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--oracle", action="store_true", help=f"cross-check with brute force (n <= {ORACLE_CAP})")
    p.add_argument("--cert-kind", action="append", choices=[k for k in CERT_KINDS if k != "path-between"])
    p.add_argument("--timing", action="store_true", help="include wall time (breaks byte-identical output)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("certify", help="emit a certificate as JSON")
    graph_input(p)
    p.add_argument("--cert-kind", required=True, choices=CERT_KINDS)
    p.add_argument("--pair", nargs=2, metavar=("V", "W"))
    p.add_argument("--remove", nargs="+", metavar="S")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="check a certificate against a graph")
    graph_input(p, "graph")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate an interval graph")
    p.add_argument("family", choices=["random", "path", "star", "complete", "nested", "onion"])
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--degree", type=float, default=4.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--connected", action="store_true", help="bridge gaps so the graph is connected (random only)")
    p.add_argument("--format", default="edge-list", choices=["edge-list", "interval-endpoints"])
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time the pipeline on random graphs")
    p.add_argument("--sizes", default="100000,200000,400000")
    p.add_argument("--degree", type=float, default=4.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--runs", type=int, default=5, help="graphs per size (seeds seed, seed+1, ...); times are medians")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Fail as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except NotInterval as exc:
        print(str(exc), file=sys.stderr)
        return BAD_INPUT
    except (WitnessMismatch, ConstructionError, MergeInfeasible) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return INTERNAL


if __name__ == "__main__":
    sys.exit(main())
