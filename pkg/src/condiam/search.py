"""Exhaustive enumeration, argmax-Wiener sweeps, and extremal-claim audits.

Trees are enumerated natively (leaf augmentation deduplicated by centroid-
rooted subtree codes). General connected graphs come either from graph6
corpora or from the built-in vertex-augmentation generator, which is
practical up to n = 9. Sweeps re-verify everything they report: maximizer
Wiener values against an independent Floyd-Warshall sum, maximizer
conditional diameters against the subset-pair oracle (n <= 10), and the
n-2s+1 bound on every graph examined.
"""

from __future__ import annotations

import itertools
import json
import multiprocessing
from dataclasses import dataclass
from typing import Iterable, Iterator

from .canon import canonical_key
from .conditional_diameter import (
    condiam_upper_bound,
    conditional_diameter,
    naive_conditional_diameter,
)
from .families import claimed_difference_poly, claimed_extremal, construction_difference
from .graph import Graph, is_connected
from .graph6 import HEADER, Graph6Error, emit_graph6, parse_graph6
from .invariants import wiener

MATCH_UNIQUE = "MATCH_UNIQUE"
TIE = "TIE"
MISMATCH = "MISMATCH"
EMPTY_CLASS = "EMPTY_CLASS"
STATUSES = frozenset({MATCH_UNIQUE, TIE, MISMATCH, EMPTY_CLASS})


@dataclass(frozen=True)
class ExtremalClaim:
    """One audited instance: the claimed unique maximizer for D(G;s)=n-2s-c."""
    c: int
    s: int
    n: int
    target_d: int
    claimed: tuple[bytes, ...]


@dataclass(frozen=True)
class ArgmaxReport:
    """Result of one class sweep; maximizers are (canonical key, graph6) pairs."""
    class_size: int
    max_wiener: int | None
    maximizers: tuple[tuple[bytes, str], ...]


@dataclass(frozen=True)
class VerificationCertificate:
    """Audit record of one claim against an exhaustively enumerated class."""
    claim: ExtremalClaim
    report: ArgmaxReport
    status: str
    crosscheck: tuple[tuple[str, str], ...] | None
    source: str


# -- enumeration -----------------------------------------------------------


def _rooted_code(adj: list[tuple[int, ...]], root: int, parent: int):
    return tuple(sorted(_rooted_code(adj, c, root) for c in adj[root] if c != parent))


def _centroids(adj: list[tuple[int, ...]], n: int) -> list[int]:
    if n <= 2:
        return list(range(n))
    deg = [len(adj[v]) for v in range(n)]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            deg[v] = 0
            for u in adj[v]:
                if deg[u] > 1:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    return sorted(layer)


def _free_tree_code(g: Graph):
    adj = [g.neighbors(v) for v in range(g.n)]
    return min(_rooted_code(adj, c, -1) for c in _centroids(adj, g.n))


def enumerate_trees(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of trees on n vertices.

    Leaf augmentation: every n-vertex tree arises from an (n-1)-vertex tree
    by attaching its new highest id to some vertex; attach points are
    deduplicated per orbit and results per free-tree code.
    """
    if n < 1:
        raise ValueError(f"tree enumeration needs n >= 1, got {n}")
    level: dict = {_free_tree_code(Graph(1)): Graph(1)}
    for k in range(2, n + 1):
        grown: dict = {}
        for _, tree in sorted(level.items()):
            adj = [tree.neighbors(v) for v in range(tree.n)]
            edges = list(tree.edges())
            seen_orbits = set()
            for v in range(tree.n):
                vcode = _rooted_code(adj, v, -1)
                if vcode in seen_orbits:
                    continue
                seen_orbits.add(vcode)
                child = Graph(k, edges + [(v, k - 1)])
                code = _free_tree_code(child)
                if code not in grown:
                    grown[code] = child
        level = grown
    for _, tree in sorted(level.items()):
        yield tree


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs on n
    vertices, by vertex augmentation (every connected graph has a non-cut
    vertex, so augmenting connected (n-1)-graphs is complete). Practical to
    n = 9; the published class counts are 1, 1, 2, 6, 21, 112, 853, 11117,
    261080 for n = 1..9.
    """
    if n < 1:
        raise ValueError(f"graph enumeration needs n >= 1, got {n}")
    level = [Graph(1)]
    for k in range(2, n + 1):
        seen: dict[bytes, Graph] = {}
        bit = 1 << (k - 1)
        for parent in level:
            base = parent.adjacency_masks
            for subset in range(1, 1 << (k - 1)):
                masks = list(base)
                m = subset
                while m:
                    low = m & -m
                    masks[low.bit_length() - 1] |= bit
                    m ^= low
                masks.append(subset)
                child = Graph.from_masks(k, tuple(masks))
                key = canonical_key(child)
                if key not in seen:
                    seen[key] = child
        level = [g for _, g in sorted(seen.items())]
    yield from level


def ingest_graph6(lines: Iterable[str | bytes], lenient: bool = False) -> Iterator[Graph]:
    """Parse a stream of graph6 lines; blank lines and the standard header
    are skipped. Malformed lines abort with their line number, or are
    skipped when lenient."""
    header = HEADER.decode("ascii")
    for lineno, raw in enumerate(lines, start=1):
        record = raw.strip()
        if not record or record in (HEADER, header):
            continue
        try:
            yield parse_graph6(record)
        except Graph6Error as exc:
            if lenient:
                continue
            raise Graph6Error(f"line {lineno}: {exc}") from exc


# -- sweeps ----------------------------------------------------------------


def _naive_wiener(g: Graph) -> int:
    """Floyd-Warshall distance sum, independent of the BFS-based wiener()."""
    n = g.n
    inf = float("inf")
    d = [[inf] * n for _ in range(n)]
    for u in range(n):
        d[u][u] = 0
    for u, v in g.edges():
        d[u][v] = d[v][u] = 1
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == inf:
                continue
            di = d[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return int(sum(d[i][j] for i in range(n) for j in range(i + 1, n)))


def _sweep_chunk(args) -> tuple[int, int | None, list[Graph], int | None]:
    graphs, s, target_d = args
    order = None
    class_size = 0
    best: int | None = None
    maximizers: list[Graph] = []
    for g in graphs:
        if order is None:
            order = g.n
        elif g.n != order:
            raise ValueError(f"mixed orders in stream: saw n={order} then n={g.n}")
        if not is_connected(g):
            continue
        value = conditional_diameter(g, s)[0]
        if value > condiam_upper_bound(g.n, s):
            raise RuntimeError(f"bound violated: D(G;{s})={value} on {emit_graph6(g)!r}")
        if value != target_d:
            continue
        class_size += 1
        w = wiener(g)
        if best is None or w > best:
            best = w
            maximizers = [g]
        elif w == best:
            maximizers.append(g)
    return class_size, best, maximizers, order


def sweep_class(
    graphs: Iterable[Graph], s: int, target_d: int, threads: int = 1
) -> ArgmaxReport:
    """Filter to connected graphs with D(G;s) = target_d and report the full
    maximizer set up to isomorphism. Reported values are re-verified: Wiener
    by an independent distance sum, conditional diameter by the subset-pair
    oracle when n <= 10."""
    if s < 1:
        raise ValueError(f"cardinality must be >= 1, got {s}")
    if threads > 1:
        pool_input = list(graphs)
        step = max(1, (len(pool_input) + threads * 4 - 1) // (threads * 4))
        chunks = [
            (pool_input[i:i + step], s, target_d)
            for i in range(0, len(pool_input), step)
        ]
        orders = {g.n for g in pool_input}
        if len(orders) > 1:
            raise ValueError(f"mixed orders in stream: {sorted(orders)}")
        with multiprocessing.Pool(threads) as pool:
            parts = pool.map(_sweep_chunk, chunks)
        class_size = sum(p[0] for p in parts)
        best = max((p[1] for p in parts if p[1] is not None), default=None)
        maximizers = [g for p in parts if p[1] == best for g in p[2]] if best is not None else []
    else:
        class_size, best, maximizers, _ = _sweep_chunk((graphs, s, target_d))

    unique: dict[bytes, Graph] = {}
    for g in maximizers:
        unique.setdefault(canonical_key(g), g)
    for key, g in unique.items():
        if _naive_wiener(g) != best:
            raise RuntimeError(f"wiener re-verification failed for {emit_graph6(g)!r}")
        if g.n <= 10 and naive_conditional_diameter(g, s) != target_d:
            raise RuntimeError(f"condiam re-verification failed for {emit_graph6(g)!r}")
    return ArgmaxReport(
        class_size=class_size,
        max_wiener=best,
        maximizers=tuple(
            (key, emit_graph6(unique[key]).decode("ascii")) for key in sorted(unique)
        ),
    )


def merge_reports(a: ArgmaxReport, b: ArgmaxReport) -> ArgmaxReport:
    """Associative, commutative argmax merge: keep the max, union maximizer
    sets on equality, deduplicate by canonical key."""
    class_size = a.class_size + b.class_size
    if a.max_wiener is None:
        best = b.max_wiener
        pool = b.maximizers
    elif b.max_wiener is None or a.max_wiener > b.max_wiener:
        best, pool = a.max_wiener, a.maximizers
    elif b.max_wiener > a.max_wiener:
        best, pool = b.max_wiener, b.maximizers
    else:
        best = a.max_wiener
        pool = a.maximizers + b.maximizers
    merged = dict(pool)
    return ArgmaxReport(
        class_size=class_size,
        max_wiener=best,
        maximizers=tuple(sorted(merged.items())),
    )


# -- claim audits ----------------------------------------------------------


def verify_claim(
    c: int, s: int, n: int, graphs: Iterable[Graph], source: str, threads: int = 1
) -> VerificationCertificate:
    """Audit one extremal claim against an enumerated class.

    Never suppresses a MISMATCH or TIE; when c=1 the certificate also
    carries both difference crosschecks (claimed polynomial vs actual
    construction difference), which are reported side by side and are not
    required to agree.
    """
    target_d = n - 2 * s - c
    claimed_graph = claimed_extremal(c, s, n)  # validates the hypothesis
    claimed_key = canonical_key(claimed_graph)
    it = iter(graphs)
    try:
        first = next(it)
    except StopIteration:
        raise ValueError("empty source: no graphs to audit against") from None
    report = sweep_class(itertools.chain([first], it), s, target_d, threads=threads)
    keys = [key for key, _ in report.maximizers]
    if report.class_size == 0:
        status = EMPTY_CLASS
    elif keys == [claimed_key]:
        status = MATCH_UNIQUE
    elif claimed_key in keys:
        status = TIE
    else:
        status = MISMATCH
    crosscheck = None
    if c == 1:
        crosscheck = (
            ("claimed_poly_value", str(claimed_difference_poly(n, s))),
            ("construction_difference_value", str(construction_difference(n, s))),
        )
    return VerificationCertificate(
        claim=ExtremalClaim(c=c, s=s, n=n, target_d=target_d, claimed=(claimed_key,)),
        report=report,
        status=status,
        crosscheck=crosscheck,
        source=source,
    )


# -- serialization ---------------------------------------------------------

CSV_COLUMNS = ("c", "s", "n", "target_d", "class_size", "max_wiener", "status")


def emit_certificate(cert: VerificationCertificate, fmt: str = "json") -> bytes:
    """Serialize a certificate; JSON round-trips through parse_certificate."""
    if fmt == "json":
        doc = {
            "claim": {
                "c": cert.claim.c,
                "s": cert.claim.s,
                "n": cert.claim.n,
                "target_d": cert.claim.target_d,
                "claimed_keys": [k.hex() for k in cert.claim.claimed],
            },
            "report": {
                "class_size": cert.report.class_size,
                "max_wiener": cert.report.max_wiener,
                "maximizers": [
                    {"key": k.hex(), "graph6": g6} for k, g6 in cert.report.maximizers
                ],
            },
            "status": cert.status,
            "crosscheck": dict(cert.crosscheck) if cert.crosscheck else None,
            "source": cert.source,
        }
        return json.dumps(doc, indent=2).encode("ascii")
    if fmt == "csv":
        mw = "" if cert.report.max_wiener is None else str(cert.report.max_wiener)
        row = (
            f"{cert.claim.c},{cert.claim.s},{cert.claim.n},{cert.claim.target_d},"
            f"{cert.report.class_size},{mw},{cert.status}\n"
        )
        return row.encode("ascii")
    raise ValueError(f"unknown certificate format {fmt!r}")


def parse_certificate(data: bytes) -> VerificationCertificate:
    """Rebuild a certificate from its JSON form."""
    doc = json.loads(data.decode("ascii"))
    claim = ExtremalClaim(
        c=doc["claim"]["c"],
        s=doc["claim"]["s"],
        n=doc["claim"]["n"],
        target_d=doc["claim"]["target_d"],
        claimed=tuple(bytes.fromhex(k) for k in doc["claim"]["claimed_keys"]),
    )
    report = ArgmaxReport(
        class_size=doc["report"]["class_size"],
        max_wiener=doc["report"]["max_wiener"],
        maximizers=tuple(
            (bytes.fromhex(m["key"]), m["graph6"]) for m in doc["report"]["maximizers"]
        ),
    )
    crosscheck = None
    if doc["crosscheck"] is not None:
        crosscheck = tuple(doc["crosscheck"].items())
    return VerificationCertificate(
        claim=claim,
        report=report,
        status=doc["status"],
        crosscheck=crosscheck,
        source=doc["source"],
    )
