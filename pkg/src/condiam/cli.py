"""Command-line front end: compute invariants, emit families, solve D(G;s),
run transform property suites, sweep classes, and audit extremal claims.

Exit codes: 0 success, 1 audit signal (a certificate with status MISMATCH
or TIE, or a property-suite counterexample), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path

from .conditional_diameter import conditional_diameter
from .families import FamilyKind, FamilySpec, build_family
from .graph import Graph
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .invariants import invariant_report
from .search import (
    MISMATCH,
    TIE,
    CSV_COLUMNS,
    emit_certificate,
    enumerate_connected_graphs,
    enumerate_trees,
    ingest_graph6,
    sweep_class,
    verify_claim,
)
from .transforms import run_all_suites

_KINDS = {
    "path": FamilyKind.PATH,
    "cycle": FamilyKind.CYCLE,
    "t-single": FamilyKind.T_SINGLE,
    "t-double": FamilyKind.T_DOUBLE,
    "t-tail2": FamilyKind.T_TAIL2,
}


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("CONDIAM_THREADS", "1")))
    except ValueError:
        return 1


def _load_one_graph(args) -> Graph:
    if args.g6 is not None:
        return parse_graph6(args.g6)
    if args.infile is not None:
        with open(args.infile, "rb") as fh:
            for g in ingest_graph6(fh):
                return g
        raise ValueError(f"no graph6 record found in {args.infile}")
    raise ValueError("supply a graph with --g6 or --in")


def _resolve_source(selector: str, n: int):
    """Graph stream for `trees`, `exhaustive`, or `g6:PATH` selectors."""
    if selector == "trees":
        return enumerate_trees(n), f"trees(n={n})"
    if selector == "exhaustive":
        return enumerate_connected_graphs(n), f"exhaustive-connected(n={n})"
    if selector.startswith("g6:"):
        path = Path(selector[3:])
        if not path.exists():
            raise ValueError(f"corpus file not found: {path}")

        def stream():
            with path.open("rb") as fh:
                for g in ingest_graph6(fh):
                    if g.n != n:
                        raise ValueError(
                            f"corpus graph has order {g.n}, expected n={n}"
                        )
                    yield g

        return stream(), f"g6:{path}"
    raise ValueError(f"unknown source {selector!r} (use trees, exhaustive, or g6:PATH)")


def _write(args, payload: bytes) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_bytes(payload)
    else:
        sys.stdout.write(payload.decode("ascii"))
        if not payload.endswith(b"\n"):
            sys.stdout.write("\n")


def _cmd_compute(args) -> int:
    g = _load_one_graph(args)
    report = invariant_report(g)
    picks = [name for name in ("wiener", "diameter", "transmissions")
             if getattr(args, name)]
    if args.format == "json":
        doc = {"n": report.n, "m": g.m}
        for name in picks or ("wiener", "diameter", "transmissions"):
            value = getattr(report, name)
            doc[name] = list(value) if isinstance(value, tuple) else value
        _write(args, json.dumps(doc, indent=2).encode("ascii"))
        return 0
    if len(picks) == 1:
        value = getattr(report, picks[0])
        text = " ".join(map(str, value)) if isinstance(value, tuple) else str(value)
        _write(args, text.encode("ascii"))
        return 0
    lines = [f"n={report.n} m={g.m}"]
    for name in picks or ("wiener", "diameter", "transmissions"):
        value = getattr(report, name)
        text = " ".join(map(str, value)) if isinstance(value, tuple) else str(value)
        lines.append(f"{name}={text}")
    _write(args, "\n".join(lines).encode("ascii"))
    return 0


def _cmd_family(args) -> int:
    spec = FamilySpec(kind=_KINDS[args.kind], n=args.n, i=args.i, j=args.j)
    g = build_family(spec)
    if args.format == "text":
        edges = " ".join(f"{u}-{v}" for u, v in g.edges())
        _write(args, f"n={g.n} edges: {edges}".encode("ascii"))
    else:
        _write(args, emit_graph6(g))
    return 0


def _cmd_condiam(args) -> int:
    g = _load_one_graph(args)
    value, witness = conditional_diameter(g, args.s)
    if args.format == "json":
        doc = {"s": args.s, "value": value}
        doc["witness"] = (
            None if witness is None else {"v1": list(witness.v1), "v2": list(witness.v2)}
        )
        _write(args, json.dumps(doc, indent=2).encode("ascii"))
    elif witness is None:
        _write(args, f"D(G;{args.s}) = {value} (no disjoint subset pair)".encode())
    else:
        _write(
            args,
            f"D(G;{args.s}) = {value} witness V1={set(witness.v1)} "
            f"V2={set(witness.v2)}".encode("ascii"),
        )
    return 0


def _cmd_transform_check(args) -> int:
    results = run_all_suites(scale=args.scale)
    bad = 0
    lines = []
    for name, failures in results.items():
        lines.append(f"{name}: {'ok' if not failures else f'{len(failures)} counterexamples'}")
        for f in failures:
            lines.append(f"  {f}")
            bad += 1
    _write(args, "\n".join(lines).encode("ascii"))
    return 1 if bad else 0


def _cmd_sweep(args) -> int:
    graphs, _ = _resolve_source(args.source, args.n)
    report = sweep_class(graphs, args.s, args.target_d, threads=args.threads)
    doc = {
        "n": args.n,
        "s": args.s,
        "target_d": args.target_d,
        "class_size": report.class_size,
        "max_wiener": report.max_wiener,
        "maximizers": [{"key": k.hex(), "graph6": g6} for k, g6 in report.maximizers],
    }
    if args.format == "text":
        g6s = ", ".join(g6 for _, g6 in report.maximizers) or "-"
        _write(
            args,
            f"class_size={report.class_size} max_wiener={report.max_wiener} "
            f"maximizers=[{g6s}]".encode("ascii"),
        )
    else:
        _write(args, json.dumps(doc, indent=2).encode("ascii"))
    return 0


def _cmd_verify(args) -> int:
    graphs, label = _resolve_source(args.source, args.n)
    cert = verify_claim(args.c, args.s, args.n, graphs, label, threads=args.threads)
    if args.format == "text":
        g6s = ", ".join(g6 for _, g6 in cert.report.maximizers) or "-"
        lines = [
            f"{cert.status}: c={args.c} s={args.s} n={args.n} "
            f"target_d={cert.claim.target_d} class_size={cert.report.class_size} "
            f"max_wiener={cert.report.max_wiener}",
            f"maximizers: {g6s}",
        ]
        if cert.crosscheck:
            pairs = " ".join(f"{k}={v}" for k, v in cert.crosscheck)
            lines.append(f"crosscheck: {pairs}")
        _write(args, "\n".join(lines).encode("ascii"))
    else:
        _write(args, emit_certificate(cert, args.format))
    return 1 if cert.status in (MISMATCH, TIE) else 0


def _hypothesis_min_n(c: int, s: int) -> int:
    return {-1: 2 * s, 0: 2 * s + 3, 1: 2 * s + 5}[c]


def _cmd_audit(args) -> int:
    cs = [int(x) for x in args.c.split(",")]
    ss = [int(x) for x in args.s.split(",")]
    certs = []
    for c in cs:
        if c not in (-1, 0, 1):
            raise ValueError(f"c must be in -1,0,1, got {c}")
        for s in ss:
            lo = max(_hypothesis_min_n(c, s), args.n_min or 0)
            for n in range(lo, args.n_max + 1):
                graphs, label = _resolve_source(args.source, n)
                certs.append(
                    verify_claim(c, s, n, graphs, label, threads=args.threads)
                )
    if args.format == "json":
        payload = b"[\n" + b",\n".join(emit_certificate(c, "json") for c in certs) + b"\n]\n"
    else:
        rows = [(",".join(CSV_COLUMNS) + "\n").encode("ascii")]
        rows += [emit_certificate(c, "csv") for c in certs]
        payload = b"".join(rows)
    _write(args, payload)
    return 1 if any(c.status in (MISMATCH, TIE) for c in certs) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="condiam",
        description="Wiener index, conditional diameter, extremal families, and claim audits",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add_graph_input(p):
        p.add_argument("--g6", help="inline graph6 record")
        p.add_argument("--in", dest="infile", help="file with one graph6 record")

    def add_out(p):
        p.add_argument("--out", help="write output to this path instead of stdout")

    p = sub.add_parser("compute", help="invariants of one graph")
    add_graph_input(p)
    p.add_argument("--wiener", action="store_true")
    p.add_argument("--diameter", action="store_true")
    p.add_argument("--transmissions", action="store_true")
    p.add_argument("--format", choices=["text", "json"], default="text")
    add_out(p)
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("family", help="emit a family constructor result")
    p.add_argument("--kind", choices=sorted(_KINDS), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--format", choices=["g6", "text"], default="g6")
    add_out(p)
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("condiam", help="conditional diameter D(G;s) with witness")
    add_graph_input(p)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    add_out(p)
    p.set_defaults(func=_cmd_condiam)

    p = sub.add_parser("transform-check", help="run the transform property suites")
    p.add_argument("--scale", type=float, default=1.0,
                   help="trial-count multiplier (default 1.0 = full suites)")
    add_out(p)
    p.set_defaults(func=_cmd_transform_check)

    def add_sweep_common(p):
        p.add_argument("--source", default="trees",
                       help="trees | exhaustive | g6:PATH (default trees)")
        p.add_argument("--threads", type=int, default=_default_threads())
        add_out(p)

    p = sub.add_parser("sweep", help="argmax-Wiener sweep of one class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--target-d", dest="target_d", type=int, required=True)
    p.add_argument("--format", choices=["json", "text"], default="json")
    add_sweep_common(p)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("verify", help="audit one extremal claim")
    p.add_argument("--c", type=int, required=True, choices=[-1, 0, 1])
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv", "text"], default="text")
    add_sweep_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("audit", help="audit a (c,s,n) grid, emit the certificate table")
    p.add_argument("--c", default="-1,0,1", help="comma list of c values")
    p.add_argument("--s", default="1,2", help="comma list of s values")
    p.add_argument("--n-min", dest="n_min", type=int)
    p.add_argument("--n-max", dest="n_max", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    add_sweep_common(p)
    p.set_defaults(func=_cmd_audit)

    return parser


def _glue_negative_values(argv: list[str]) -> list[str]:
    """Join `--c -1,0,1` into `--c=-1,0,1` so argparse does not mistake the
    leading-dash value for an option."""
    out = []
    i = 0
    while i < len(argv):
        if (
            argv[i] == "--c"
            and i + 1 < len(argv)
            and re.fullmatch(r"-?\d+(,-?\d+)*", argv[i + 1])
        ):
            out.append(f"--c={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def run(argv: list[str]) -> int:
    """Dispatch a CLI invocation; never raises."""
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_negative_values(argv))
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except (ValueError, Graph6Error, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KeyboardInterrupt:
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
