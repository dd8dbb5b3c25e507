"""Enumeration completeness, sweep soundness, claim audits, certificates."""

import io
import random

import networkx as nx
import pytest

from condiam.canon import canonical_key
from condiam.families import path_graph, tree_double, tree_single, tree_tail2
from condiam.graph import Graph, is_connected
from condiam.graph6 import Graph6Error, emit_graph6
from condiam.invariants import wiener
from condiam.search import (
    EMPTY_CLASS,
    MATCH_UNIQUE,
    MISMATCH,
    TIE,
    ArgmaxReport,
    emit_certificate,
    enumerate_connected_graphs,
    enumerate_trees,
    ingest_graph6,
    merge_reports,
    parse_certificate,
    sweep_class,
    verify_claim,
)

from oracles import oracle_wiener

TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159]  # n = 1..14
CONNECTED_COUNTS = [1, 1, 2, 6, 21, 112, 853, 11117, 261080]  # n = 1..9


def test_tree_enumeration_counts(trees_by_n):
    for n in range(1, 15):
        assert len(trees_by_n(n)) == TREE_COUNTS[n - 1], n


def test_tree_enumeration_matches_networkx_classes(trees_by_n):
    for n in range(2, 10):
        ours = {canonical_key(t) for t in trees_by_n(n)}
        theirs = set()
        for t in nx.nonisomorphic_trees(n):
            theirs.add(canonical_key(Graph(n, list(t.edges()))))
        assert ours == theirs


def test_enumerated_trees_are_trees_and_distinct(trees_by_n):
    for n in range(1, 12):
        keys = set()
        for t in trees_by_n(n):
            assert t.n == n and t.m == n - 1 and is_connected(t)
            keys.add(canonical_key(t))
        assert len(keys) == len(trees_by_n(n))


def test_connected_enumeration_counts():
    for n in range(1, 8):
        assert sum(1 for _ in enumerate_connected_graphs(n)) == CONNECTED_COUNTS[n - 1]


def test_connected_enumeration_is_sound():
    seen = set()
    for g in enumerate_connected_graphs(5):
        assert is_connected(g)
        key = canonical_key(g)
        assert key not in seen
        seen.add(key)


def test_corpus_files_match_published_counts(corpus_path):
    for n, expected in ((8, 11117), (9, 261080)):
        with corpus_path(n).open("rb") as fh:
            assert sum(1 for line in fh if line.strip()) == expected


def test_corpus_spot_checks(corpus_path):
    rng = random.Random(40)
    with corpus_path(8).open("rb") as fh:
        lines = [line.strip() for line in fh if line.strip()]
    graphs = list(ingest_graph6(lines))
    keys = set()
    for g, line in zip(graphs, lines):
        assert g.n == 8
        assert is_connected(g)
        assert emit_graph6(g) == line  # codec identity over the full corpus
    for g in rng.sample(graphs, 200):
        keys.add(canonical_key(g))
    assert len(keys) == 200  # sampled classes are pairwise distinct


def test_ingest_graph6():
    lines = [">>graph6<<", "Bw", "", "A_"]
    graphs = list(ingest_graph6(lines))
    assert len(graphs) == 2 and graphs[0].m == 3 and graphs[1].m == 1
    with pytest.raises(Graph6Error) as err:
        list(ingest_graph6(["Bw", "Bw", "B\x01"]))
    assert "line 3" in str(err.value)
    assert len(list(ingest_graph6(["Bw", "B\x01", "Bw"], lenient=True))) == 2
    assert list(ingest_graph6(io.BytesIO(b">>graph6<<Bw\nBw\n"))) and True


def test_ingest_header_prefixed_first_record():
    graphs = list(ingest_graph6([b">>graph6<<Bw", b"A_"]))
    assert len(graphs) == 2 and graphs[0].m == 3


def test_sweep_class_examples(trees_by_n):
    rep = sweep_class(trees_by_n(8), 2, 5)
    assert rep.class_size == 3
    assert rep.max_wiener == 84 == 8 * 63 // 6
    assert [k for k, _ in rep.maximizers] == [canonical_key(path_graph(8))]

    rep = sweep_class(trees_by_n(7), 2, 3)
    assert rep.class_size == 6 and rep.max_wiener == 50
    assert [k for k, _ in rep.maximizers] == [canonical_key(tree_single(7, 3))]

    rep = sweep_class(trees_by_n(7), 3, 7)  # exceeds the n-2s+1 bound
    assert rep == ArgmaxReport(class_size=0, max_wiener=None, maximizers=())


def test_sweep_rejects_mixed_orders(trees_by_n):
    with pytest.raises(ValueError):
        sweep_class(trees_by_n(7) + trees_by_n(8), 2, 3)


def test_sweep_maximizer_values_reverified(trees_by_n):
    rep = sweep_class(trees_by_n(9), 2, 4)
    for _, g6 in rep.maximizers:
        g = next(iter(ingest_graph6([g6])))
        assert oracle_wiener(g) == rep.max_wiener


def test_merge_reports_associative_and_deterministic(trees_by_n):
    trees = trees_by_n(10)
    whole = sweep_class(trees, 2, 5)
    a = sweep_class(trees[:100], 2, 5)
    b = sweep_class(trees[100:400], 2, 5)
    c = sweep_class(trees[400:], 2, 5)
    assert merge_reports(merge_reports(a, b), c) == whole
    assert merge_reports(a, merge_reports(b, c)) == whole
    empty = ArgmaxReport(0, None, ())
    assert merge_reports(empty, whole) == whole


def test_parallel_sweep_matches_serial(trees_by_n):
    serial = sweep_class(trees_by_n(10), 2, 5)
    parallel = sweep_class(trees_by_n(10), 2, 5, threads=2)
    assert serial == parallel


def test_verify_claim_match_unique(trees_by_n):
    cert = verify_claim(-1, 2, 8, trees_by_n(8), "trees(n=8)")
    assert cert.status == MATCH_UNIQUE
    assert cert.claim.target_d == 5
    assert cert.crosscheck is None
    cert = verify_claim(0, 2, 9, trees_by_n(9), "trees(n=9)")
    assert cert.status == MATCH_UNIQUE
    assert cert.report.maximizers[0][0] == canonical_key(tree_single(9, 3))


def test_verify_claim_tie_at_n10_s2(trees_by_n):
    cert = verify_claim(1, 2, 10, trees_by_n(10), "trees(n=10)")
    assert cert.status == TIE
    assert cert.report.max_wiener == 141
    keys = {k for k, _ in cert.report.maximizers}
    assert keys == {
        canonical_key(tree_double(10, 3, 6)),
        canonical_key(tree_tail2(10, 4)),
    }
    assert dict(cert.crosscheck) == {
        "claimed_poly_value": "33",
        "construction_difference_value": "0",
    }


def test_verify_claim_mismatch_at_n9_s2(trees_by_n):
    cert = verify_claim(1, 2, 9, trees_by_n(9), "trees(n=9)")
    assert cert.status == MISMATCH
    assert cert.report.max_wiener == 102
    assert [k for k, _ in cert.report.maximizers] == [canonical_key(tree_tail2(9, 4))]
    assert dict(cert.crosscheck)["construction_difference_value"] == "-2"


def test_verify_claim_errors(trees_by_n):
    with pytest.raises(ValueError):
        verify_claim(0, 2, 6, trees_by_n(6), "trees")  # hypothesis violated
    with pytest.raises(ValueError):
        verify_claim(-1, 2, 8, [], "empty")


def test_verify_claim_empty_class_status():
    # a crafted partial source with no graph in the audited class
    stars = [Graph(8, [(0, i) for i in range(1, 8)])]
    cert = verify_claim(-1, 2, 8, stars, "stars-only")
    assert cert.status == EMPTY_CLASS
    assert cert.report.max_wiener is None


def test_certificate_round_trips(trees_by_n):
    for cert in (
        verify_claim(-1, 2, 8, trees_by_n(8), "trees(n=8)"),
        verify_claim(1, 2, 10, trees_by_n(10), "trees(n=10)"),
    ):
        blob = emit_certificate(cert, "json")
        assert parse_certificate(blob) == cert
        row = emit_certificate(cert, "csv").decode("ascii")
        fields = row.strip().split(",")
        assert len(fields) == 7 and fields[-1] == cert.status
    with pytest.raises(ValueError):
        emit_certificate(cert, "xml")


def test_certificates_deterministic(trees_by_n):
    a = verify_claim(1, 2, 10, trees_by_n(10), "trees(n=10)")
    b = verify_claim(1, 2, 10, list(trees_by_n(10)), "trees(n=10)")
    assert emit_certificate(a, "json") == emit_certificate(b, "json")
