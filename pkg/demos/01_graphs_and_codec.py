"""Build small graphs, edit them, and round-trip the graph6 codec.

Run: python demos/01_graphs_and_codec.py
"""

from condiam import (
    add_edge,
    all_pairs_distances,
    build_graph,
    canonical_key,
    emit_graph6,
    is_connected,
    parse_graph6,
    remove_edge,
    remove_vertex,
)

print("== building graphs ==")
c4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
print(f"4-cycle: {c4}, connected={is_connected(c4)}")
print("edges:", list(c4.edges()))

print("\n== distances ==")
dm = all_pairs_distances(c4)
print("distance matrix of C_4:")
print(dm.d)

print("\n== edit operations (inputs are never mutated) ==")
p4 = remove_edge(c4, 0, 1)
print(f"C_4 minus edge (0,1): {p4} with edges {list(p4.edges())}")
tri = add_edge(build_graph(3, [(0, 1), (1, 2)]), 0, 2)
print(f"P_3 plus edge (0,2): {tri}")
print(f"P_4 minus an end vertex: {remove_vertex(p4, 0)} (ids compact downward)")

print("\n== graph6 codec ==")
rec = emit_graph6(tri)
print(f"triangle encodes to {rec!r}")
back = parse_graph6(b">>graph6<<" + rec)
print(f"decoding (with optional header) gives the same graph: {back == tri}")

print("\n== canonical keys identify isomorphism classes ==")
p4_relabelled = build_graph(4, [(2, 0), (0, 3), (3, 1)])
star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
print("two labelings of the 4-path get equal keys:",
      canonical_key(p4) == canonical_key(p4_relabelled))
print("the 4-path and the 4-star get different keys:",
      canonical_key(p4) != canonical_key(star))
