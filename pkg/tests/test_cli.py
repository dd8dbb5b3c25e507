"""CLI dispatch, output formats, and the exit-code contract:
0 success, 1 audit signal, 2 usage/input error."""

import json

import pytest

from condiam.cli import run
from condiam.families import path_graph, tree_single
from condiam.graph6 import emit_graph6
from condiam.search import parse_certificate


def g6(graph) -> str:
    return emit_graph6(graph).decode("ascii")


def test_compute_wiener_inline(capsys):
    assert run(["compute", "--g6", "Bw", "--wiener"]) == 0
    assert capsys.readouterr().out.strip() == "3"


def test_compute_all_text(capsys):
    assert run(["compute", "--g6", g6(path_graph(4))]) == 0
    out = capsys.readouterr().out
    assert "wiener=10" in out and "diameter=3" in out


def test_compute_json(capsys):
    assert run(["compute", "--g6", g6(path_graph(4)), "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc == {
        "n": 4, "m": 3, "wiener": 10, "diameter": 3, "transmissions": [6, 4, 4, 6],
    }


def test_compute_from_file(tmp_path, capsys):
    path = tmp_path / "one.g6"
    path.write_bytes(b">>graph6<<Bw\n")
    assert run(["compute", "--in", str(path), "--wiener"]) == 0
    assert capsys.readouterr().out.strip() == "3"


def test_family_emits_graph6(capsys):
    assert run(["family", "--kind", "t-single", "--n", "7", "--i", "3"]) == 0
    rec = capsys.readouterr().out.strip()
    assert rec == g6(tree_single(7, 3))
    assert run(["family", "--kind", "path", "--n", "4", "--format", "text"]) == 0
    assert "0-1" in capsys.readouterr().out


def test_condiam_subcommand(capsys):
    assert run(["condiam", "--g6", g6(path_graph(6)), "--s", "2"]) == 0
    assert "D(G;2) = 3" in capsys.readouterr().out
    assert run(["condiam", "--g6", g6(path_graph(6)), "--s", "2", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["value"] == 3 and len(doc["witness"]["v1"]) == 2


def test_sweep_subcommand(capsys):
    from condiam.canon import canonical_key
    from condiam.graph6 import parse_graph6

    assert run(["sweep", "--n", "8", "--s", "2", "--target-d", "5"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["class_size"] == 3 and doc["max_wiener"] == 84
    winner = parse_graph6(doc["maximizers"][0]["graph6"])
    assert canonical_key(winner) == canonical_key(path_graph(8))


def test_verify_match_exit_zero(capsys):
    assert run(["verify", "--c", "-1", "--s", "2", "--n", "8", "--source", "trees"]) == 0
    assert "MATCH_UNIQUE" in capsys.readouterr().out


def test_verify_tie_exit_one(capsys):
    code = run(["verify", "--c", "1", "--s", "2", "--n", "10", "--source", "trees",
                "--format", "json"])
    assert code == 1
    cert = parse_certificate(capsys.readouterr().out.encode("ascii"))
    assert cert.status == "TIE" and cert.report.max_wiener == 141


def test_verify_exhaustive_source(capsys):
    assert run(["verify", "--c", "-1", "--s", "2", "--n", "6",
                "--source", "exhaustive"]) == 0
    assert "MATCH_UNIQUE" in capsys.readouterr().out


def test_verify_g6_source(tmp_path, capsys):
    from condiam.search import enumerate_trees

    path = tmp_path / "trees8.g6"
    path.write_bytes(b"".join(emit_graph6(t) + b"\n" for t in enumerate_trees(8)))
    assert run(["verify", "--c", "-1", "--s", "2", "--n", "8",
                "--source", f"g6:{path}"]) == 0
    assert run(["verify", "--c", "-1", "--s", "2", "--n", "7",
                "--source", f"g6:{path}"]) == 2  # order mismatch is an input error


def test_audit_accepts_leading_negative_c_list(capsys):
    code = run(["audit", "--c", "-1,0", "--s", "1", "--n-max", "5",
                "--source", "trees"])
    out = capsys.readouterr().out
    assert code == 0
    assert all(line.endswith(("status", "MATCH_UNIQUE")) for line in out.strip().splitlines())


def test_audit_table(capsys):
    code = run(["audit", "--c", "0,1", "--s", "2", "--n-max", "10",
                "--source", "trees"])
    out = capsys.readouterr().out
    assert code == 1  # the c=1 anomalies surface
    lines = [l for l in out.strip().splitlines() if l]
    assert lines[0] == "c,s,n,target_d,class_size,max_wiener,status"
    assert any(line.endswith("MISMATCH") for line in lines)
    assert any(line.endswith("TIE") for line in lines)
    assert sum(1 for l in lines[1:]) == 4 + 2  # c=0: n 7..10; c=1: n 9..10


def test_transform_check_ok(capsys):
    assert run(["transform-check", "--scale", "0.01"]) == 0
    out = capsys.readouterr().out
    assert out.count("ok") == 5


def test_output_file(tmp_path):
    out = tmp_path / "report.json"
    assert run(["compute", "--g6", "Bw", "--format", "json", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["wiener"] == 3


def test_usage_errors_exit_two(capsys):
    assert run(["compute", "--g6", "B\x1f", "--wiener"]) == 2  # malformed graph6
    assert run(["compute", "--wiener"]) == 2  # no graph supplied
    assert run(["compute", "--in", "/nonexistent/x.g6"]) == 2
    assert run(["family", "--kind", "t-single", "--n", "7"]) == 2  # missing --i
    assert run(["no-such-command"]) == 2
    assert run(["verify", "--c", "5", "--s", "2", "--n", "8"]) == 2
    assert run(["sweep", "--n", "8", "--s", "2", "--target-d", "5",
                "--source", "bogus"]) == 2
    capsys.readouterr()


def test_malformed_corpus_names_line(tmp_path, capsys):
    path = tmp_path / "bad.g6"
    path.write_bytes(b"Bw\nBw\nB\x01\n")
    # graphs are order 3 -> n=3; third line is corrupt
    assert run(["sweep", "--n", "3", "--s", "1", "--target-d", "2",
                "--source", f"g6:{path}"]) == 2
    err = capsys.readouterr().err
    assert "line 3" in err
