"""The conditional diameter D(G;s): farthest pair of s-element subsets.

D(G;1) is the ordinary diameter; for n >= 2s the value is at most n-2s+1.
The solver reduces the threshold decision "D(G;s) >= t" to finding a
balanced biclique in the far graph (vertices joined when their distance
is at least t) and walks thresholds downward.

Run: python demos/03_conditional_diameter.py
"""

from condiam import (
    balanced_biclique_at_least,
    condiam_upper_bound,
    conditional_diameter,
    cycle_graph,
    diameter,
    far_graph,
    naive_conditional_diameter,
    path_graph,
    set_distance,
    tree_single,
)

print("== set distance: minimum over cross pairs ==")
p6 = path_graph(6)
print("d({0},{5}) on P_6 =", set_distance(p6, {0}, {5}))
print("d({0,1},{4,5}) on P_6 =", set_distance(p6, {0, 1}, {4, 5}))

print("\n== far graph reduction ==")
for t in (1, 3, 6):
    f = far_graph(p6, t)
    print(f"far graph of P_6 at threshold {t}: {f.m} edges")
f = far_graph(cycle_graph(6), 3)
print("far graph of C_6 at 3 is the antipodal matching:", sorted(f.edges()))
print("a matching holds no balanced 2,2-biclique:",
      balanced_biclique_at_least(f, 2) is None)

print("\n== exact conditional diameter with witnesses ==")
for g, name in ((p6, "P_6"), (tree_single(7, 3), "T(7, pendant at 3)"),
                (cycle_graph(8), "C_8")):
    for s in (1, 2):
        value, wit = conditional_diameter(g, s)
        tag = f"V1={set(wit.v1)} V2={set(wit.v2)}" if wit else "no disjoint pair"
        print(f"D({name};{s}) = {value}  [{tag}]  bound={condiam_upper_bound(g.n, s)}")

print("\n== s=1 is the ordinary diameter; brute force agrees everywhere ==")
g = tree_single(9, 4)
print("D(G;1) == diameter:", conditional_diameter(g, 1)[0] == diameter(g))
for s in (1, 2, 3):
    exact = conditional_diameter(g, s)[0]
    naive = naive_conditional_diameter(g, s)
    print(f"s={s}: threshold solver {exact} == subset-pair brute force {naive}")
