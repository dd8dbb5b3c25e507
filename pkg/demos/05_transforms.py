"""Wiener-increasing transformations and their randomized property suites.

Run: python demos/05_transforms.py
"""

import random

from condiam import (
    ShiftSite,
    attach_two_paths,
    cycle_graph,
    edge_deletion_increases,
    path_graph,
    pendant_identity_holds,
    pendant_path_shift,
    prune_to_pendant,
    straighten_branch,
    wiener,
)
from condiam.graph import build_graph
from condiam.transforms import run_all_suites

print("== pendant identity: W(G) = W(G-v) + D_{G-v}(u) + n-1 ==")
print("holds on P_4 at an end:", pendant_identity_holds(path_graph(4), 3))

print("\n== path shift: move the shorter arm's tip to the longer arm ==")
site = ShiftSite(path_graph(2), 0, 1, 1)
before, after = wiener(attach_two_paths(site)), wiener(pendant_path_shift(site))
print(f"K_1,3 -> P_4 shift: W {before} -> {after} (strictly up)")

print("\n== pruning a vertex to pendant status ==")
c4 = cycle_graph(4)
pruned = prune_to_pendant(c4, 0, 1)
print(f"C_4 with vertex 0 pruned to one edge: W {wiener(c4)} -> {wiener(pruned)}")

print("\n== edge deletion in a connected graph raises W ==")
reduced, grew = edge_deletion_increases(cycle_graph(5), 0, 1)
print(f"C_5 minus one edge: W {wiener(cycle_graph(5))} -> {wiener(reduced)}, grew={grew}")

print("\n== straightening a hanging branch into a pendant path ==")
# vertex 1 is the gate; 2,3,4 hang off it as a star
g = build_graph(5, [(0, 1), (1, 2), (1, 3), (1, 4)])
out = straighten_branch(g, [2, 3, 4], 1)
print(f"branch edges after: {[e for e in out.edges() if e[0] >= 1]}")
print(f"W {wiener(g)} -> {wiener(out)} (never decreases)")

print("\n== randomized property suites (reduced trial counts) ==")
random.seed(0)
for name, failures in run_all_suites(scale=0.05).items():
    print(f"{name:18s} {'ok' if not failures else failures}")
