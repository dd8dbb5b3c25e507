"""graph6 codec: the printable-ASCII encoding of labelled simple graphs.

Format: an order field N(n) followed by the upper-triangle adjacency bits
in column-major order x(0,1), x(0,2), x(1,2), x(0,3), ..., zero-padded to
6-bit groups, each group stored as its value plus 63. N(n) is chr(n+63)
for n < 63 and '~' plus three 6-bit digits for 63 <= n <= 258047; the
8-byte extension beyond that is not supported here.
"""

from __future__ import annotations

from .graph import Graph

HEADER = b">>graph6<<"
_MAX_LONG_N = 258047  # largest order encodable in the 4-byte form


class Graph6Error(ValueError):
    """Malformed or unsupported graph6 data."""


def parse_graph6(record: bytes | str) -> Graph:
    """Decode one graph6 record, optionally prefixed by the standard header."""
    if isinstance(record, str):
        try:
            data = record.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ascii character in graph6 record") from exc
    else:
        data = record
    data = data.rstrip(b"\r\n")
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if not data:
        raise Graph6Error("empty graph6 record")
    for byte in data:
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte} outside graph6 range [63,126]")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("8-byte order encoding not supported (n > 258047)")
        if len(data) < 4:
            raise Graph6Error("truncated order field")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise Graph6Error(f"truncated record: need {need} body bytes, got {len(body)}")
    if len(body) > need:
        raise Graph6Error(f"trailing data: expected {need} body bytes, got {len(body)}")
    edges = []
    bit = 0
    u, v = 0, 1
    for byte in body:
        group = byte - 63
        for k in range(5, -1, -1):
            if bit >= nbits:
                if (group >> k) & 1:
                    raise Graph6Error("nonzero padding bits")
                continue
            if (group >> k) & 1:
                edges.append((u, v))
            bit += 1
            u += 1
            if u == v:
                u, v = 0, v + 1
    return Graph(n, edges)


def emit_graph6(g: Graph) -> bytes:
    """Encode a labelled graph as one graph6 record (no header, no newline)."""
    n = g.n
    if n > _MAX_LONG_N:
        raise Graph6Error(f"order {n} exceeds supported graph6 range")
    if n < 63:
        out = bytearray([n + 63])
    else:
        out = bytearray([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    group = 0
    filled = 0
    for v in range(1, n):
        for u in range(v):
            group = (group << 1) | (1 if g.has_edge(u, v) else 0)
            filled += 1
            if filled == 6:
                out.append(group + 63)
                group, filled = 0, 0
    if filled:
        out.append((group << (6 - filled)) + 63)
    return bytes(out)
