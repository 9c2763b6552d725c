"""Command-line driver: exit codes, JSON round trips, determinism."""

from __future__ import annotations

import json

from rsqg.cli import run
from rsqg.matrices import matrix_from_json, matrix_to_json
from rsqg.rmatrix import build_rhat_explicit
from rsqg.scalars import rs_ring


def test_unknown_family_exits_2(capsys):
    assert run(["rmatrix", "build", "--family", "X", "--rank", "2"]) == 2


def test_bad_rank_exits_2(capsys):
    assert run(["rootdata", "dump", "--family", "B", "--rank", "1"]) == 2


def test_verify_pass_exits_0(capsys):
    code = run(["rmatrix", "verify", "--family", "B", "--rank", "2", "--checks", "braid"])
    out = capsys.readouterr().out
    assert code == 0
    assert "[pass] B2 braid" in out


def test_lyndon_table(capsys):
    assert run(["lyndon", "table", "--family", "D", "--rank", "4"]) == 0
    out = capsys.readouterr().out
    assert "gamma[1,1]" in out and "beta[1,2]" in out


def test_rootdata_dump_json(tmp_path, capsys):
    path = tmp_path / "b3.json"
    assert run(["rootdata", "dump", "--family", "B", "--rank", "3", "--out", str(path)]) == 0
    obj = json.loads(path.read_text())
    assert obj["family"] == "B" and len(obj["positive_roots"]) == 9
    assert obj["omega"]["1,0"] == "1 * r^2 * s^2"


def test_matrix_json_round_trip(tmp_path):
    ring = rs_ring()
    m = build_rhat_explicit("C", 2, ring)
    again = matrix_from_json(ring, json.loads(json.dumps(matrix_to_json(m))))
    assert again == m


def test_rmatrix_build_out(tmp_path, capsys):
    path = tmp_path / "r.json"
    code = run(
        ["rmatrix", "build", "--family", "C", "--rank", "2", "--route", "factorized", "--out", str(path)]
    )
    assert code == 0
    obj = json.loads(path.read_text())
    ring = rs_ring()
    assert matrix_from_json(ring, obj) == build_rhat_explicit("C", 2, ring)


def test_rep_dump(tmp_path, capsys):
    path = tmp_path / "rep.json"
    assert run(["rep", "dump", "--family", "B", "--rank", "2", "--out", str(path)]) == 0
    obj = json.loads(path.read_text())
    assert obj["dimension"] == 5
    assert "root_vectors" in obj and "gamma[1,2]" in obj["root_vectors"]
    path2 = tmp_path / "erep.json"
    assert run(["rep", "dump", "--family", "C", "--rank", "2", "--affine", "--out", str(path2)]) == 0
    obj2 = json.loads(path2.read_text())
    assert "e0" in obj2["generators"]


def test_pairing_constants_cli(capsys):
    assert run(["pairing", "constants", "--family", "B", "--rank", "2", "--max-m", "1"]) == 0
    out = capsys.readouterr().out
    assert "[ok]" in out and "MISMATCH" not in out


def test_embed_verify_cli(capsys):
    assert run(["embed", "verify", "--family", "A", "--rank", "2", "--checks", "dj,twist"]) == 0


def test_affine_verify_cli(capsys):
    assert (
        run(["affine", "verify", "--family", "C", "--rank", "2", "--checks", "baxterize-match,unit"])
        == 0
    )


def test_certify_all_exits_0(tmp_path, capsys):
    path = tmp_path / "report.json"
    assert run(["certify-all", "--max-rank", "2", "--out", str(path)]) == 0
    out = capsys.readouterr().out
    assert "0 failures" in out
    report = json.loads(path.read_text())
    assert all(item["status"] == "pass" for item in report)
    # deterministic ordering by (check, family, rank)
    keys = [(item["check"], item["family"], item["rank"]) for item in report]
    assert keys == sorted(keys)


def test_failing_check_exits_1(capsys):
    from rsqg.cli import _finish
    from rsqg.report import CheckItem, Report

    rep = Report([CheckItem("demo", "B", 2, False, "entry (0,0) differs by 1")])
    assert _finish(rep) == 1
    out = capsys.readouterr().out
    assert "[fail]" in out and "witness" in out


def test_report_determinism(capsys):
    from rsqg.rmatrix import run_rmatrix_checks

    a = run_rmatrix_checks("B", 2, ["eigen", "inverse", "tables"]).to_json()
    b = run_rmatrix_checks("B", 2, ["eigen", "inverse", "tables"]).to_json()
    for x, y in zip(a, b):
        assert {k: v for k, v in x.items() if k != "seconds"} == {
            k: v for k, v in y.items() if k != "seconds"
        }
