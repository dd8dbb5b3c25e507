#!/usr/bin/env python3
"""Regenerate the committed connected-graph corpora in corpora/.

Each file holds one graph6 record per line, one representative per
isomorphism class of connected graphs on n vertices, sorted by canonical
key. Expected line counts: n=8 -> 11117, n=9 -> 261080 (the published
connected-graph sequence). The n=9 build takes a few minutes.

Usage: python scripts/build_corpora.py [n ...]   (default: 8 9)
"""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from condiam.graph6 import emit_graph6
from condiam.search import enumerate_connected_graphs

EXPECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080}


def build(n: int, out_dir: Path) -> None:
    t0 = time.time()
    out = out_dir / f"connected_n{n}.g6"
    count = 0
    with out.open("wb") as fh:
        for g in enumerate_connected_graphs(n):
            fh.write(emit_graph6(g) + b"\n")
            count += 1
    expected = EXPECTED.get(n)
    status = "ok" if expected is None or count == expected else f"MISMATCH (expected {expected})"
    print(f"n={n}: {count} graphs -> {out} [{status}] ({time.time() - t0:.1f}s)")
    if expected is not None and count != expected:
        raise SystemExit(1)


def main() -> None:
    ns = [int(a) for a in sys.argv[1:]] or [8, 9]
    out_dir = Path(__file__).resolve().parent.parent / "corpora"
    out_dir.mkdir(exist_ok=True)
    for n in ns:
        build(n, out_dir)


if __name__ == "__main__":
    main()
