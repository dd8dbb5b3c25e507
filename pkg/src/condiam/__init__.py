"""condiam: Wiener index, conditional diameter, extremal pendant-path tree
families, and exhaustive extremal-claim audits for small graphs.

The conditional diameter D(G;s) is the largest set distance between two
s-element vertex subsets; D(G;1) is the ordinary diameter, and for
connected graphs D(G;s) <= n-2s+1. The search module enumerates whole
graph classes and audits, with machine-readable certificates, which graphs
maximize the Wiener index at a prescribed conditional diameter.
"""

from .canon import canonical_key
from .conditional_diameter import (
    SubsetPairWitness,
    balanced_biclique_at_least,
    condiam_upper_bound,
    conditional_diameter,
    far_graph,
    naive_conditional_diameter,
    set_distance,
)
from .families import (
    FamilyKind,
    FamilySpec,
    build_family,
    claimed_difference_poly,
    claimed_extremal,
    construction_difference,
    cycle_graph,
    path_graph,
    tree_double,
    tree_single,
    tree_tail2,
)
from .graph import (
    UNREACHABLE,
    DistanceMatrix,
    Graph,
    add_edge,
    all_pairs_distances,
    bfs_distances,
    build_graph,
    is_connected,
    remove_edge,
    remove_vertex,
)
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .invariants import (
    InvariantReport,
    diameter,
    eccentricity,
    invariant_report,
    path_transmission,
    transmission,
    wiener,
)
from .search import (
    EMPTY_CLASS,
    MATCH_UNIQUE,
    MISMATCH,
    TIE,
    ArgmaxReport,
    ExtremalClaim,
    VerificationCertificate,
    emit_certificate,
    enumerate_connected_graphs,
    enumerate_trees,
    ingest_graph6,
    merge_reports,
    parse_certificate,
    sweep_class,
    verify_claim,
)
from .transforms import (
    ShiftSite,
    attach_two_paths,
    edge_deletion_increases,
    pendant_identity_holds,
    pendant_path_shift,
    prune_to_pendant,
    random_connected_graph,
    random_tree,
    select_keep_neighbor,
    straighten_branch,
)

__version__ = "0.1.0"
