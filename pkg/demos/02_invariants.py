"""Wiener index, transmissions, diameter, and the path transmission law.

Run: python demos/02_invariants.py
"""

from condiam import (
    cycle_graph,
    invariant_report,
    path_graph,
    path_transmission,
    transmission,
    wiener,
)

print("== Wiener index: sum of distances over unordered pairs ==")
for n in (4, 5, 10, 50):
    p = path_graph(n)
    print(f"W(P_{n}) = {wiener(p):5d}   closed form n(n^2-1)/6 = {n * (n * n - 1) // 6}")
print(f"W(C_6) = {wiener(cycle_graph(6))}")

print("\n== full invariant report ==")
rep = invariant_report(path_graph(6))
print(f"P_6: wiener={rep.wiener} diameter={rep.diameter}")
print(f"transmissions by vertex: {rep.transmissions}")
print("wiener equals half the transmission sum:",
      rep.wiener == sum(rep.transmissions) // 2)

print("\n== path transmissions drop strictly toward the center ==")
n = 9
values = [path_transmission(n, j) for j in range(1, n + 1)]
print(f"P_{n} transmissions by position: {values}")
print("mirror symmetric:", values == values[::-1])
print("matches BFS transmission:",
      values == [transmission(path_graph(n), j) for j in range(n)])
