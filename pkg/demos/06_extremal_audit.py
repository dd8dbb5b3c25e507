"""Exhaustive extremal audits: which trees maximize W at a fixed D(G;s)?

Enumerates whole isomorphism classes, filters by conditional diameter,
and checks the built-in extremal claims, producing certificates. The
c=1 class is where it gets interesting: uniqueness genuinely fails for
small n, and the certificates say so.

Run: python demos/06_extremal_audit.py  (about half a minute)
"""

from condiam import (
    emit_certificate,
    enumerate_connected_graphs,
    enumerate_trees,
    sweep_class,
    verify_claim,
)

print("== enumeration sizes ==")
print("trees on 1..10 vertices:",
      [sum(1 for _ in enumerate_trees(n)) for n in range(1, 11)])
print("connected graphs on 1..7:",
      [sum(1 for _ in enumerate_connected_graphs(n)) for n in range(1, 8)])

print("\n== one sweep: trees on 8 vertices, s=2, class D(G;2)=5 ==")
rep = sweep_class(enumerate_trees(8), 2, 5)
print(f"class size {rep.class_size}, max W = {rep.max_wiener}")
print("maximizers (graph6):", [g6 for _, g6 in rep.maximizers])

print("\n== audits across the three claims (trees, s=2) ==")
print(f"{'c':>3} {'n':>3} {'status':14} {'max W':>6}  crosscheck")
for c, n_range in ((-1, range(4, 12)), (0, range(7, 12)), (1, range(9, 13))):
    for n in n_range:
        cert = verify_claim(c, 2, n, enumerate_trees(n), f"trees(n={n})")
        cross = " ".join(f"{k}={v}" for k, v in (cert.crosscheck or ()))
        print(f"{c:>3} {n:>3} {cert.status:14} {cert.report.max_wiener:>6}  {cross}")

print("\n== one full certificate (the n=10 tie) ==")
cert = verify_claim(1, 2, 10, enumerate_trees(10), "trees(n=10)")
print(emit_certificate(cert, "json").decode())
