import csv
import io
import json

import pytest

from equiareal.cli import CSV_COLUMNS, dump_json, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out), out


def test_verify_all(capsys):
    code, rep, _ = run_json(capsys, "verify", "all")
    assert code == 0 and rep["passed"]
    assert rep["result"]["count"] >= 30


def test_verify_octic_includes_reduction(capsys):
    _, rep, _ = run_json(capsys, "verify", "octic")
    names = {c["name"]: c for c in rep["result"]["checks"]}
    assert names["six-variable reduction identity"]["passed"]


def test_verify_heights_includes_determinants(capsys):
    _, rep, _ = run_json(capsys, "verify", "heights")
    details = [c["detail"] for c in rep["result"]["checks"]]
    assert "det 4" in details and "det 1" in details


def test_triangles(capsys):
    code, rep, _ = run_json(capsys, "triangles", "--family", "sol1", "--t", "4")
    assert code == 0
    assert rep["result"]["roots_x"] == ["63232", "71825", "76032"]
    assert rep["result"]["sixteen_area_sq"] == "1617508083022593897795364438996422549375"
    _, rep, _ = run_json(capsys, "triangles", "--family", "sol2", "--t", "3/2")
    assert rep["result"]["roots_y"] == ["293", "513", "536"]


def test_not_a_triangle_exit_2(capsys):
    code, rep, _ = run_json(capsys, "triangles", "--family", "sol2", "--t", "2")
    assert code == 2 and "triangle" in rep["error"]


@pytest.mark.parametrize("t", ["1/0", "abc"])
def test_bad_t_exit_2(capsys, t):
    code, _ = run(capsys, "curve", "--t", t)
    assert code == 2


def test_low_precision_rejected(capsys):
    code, _ = run(capsys, "curve", "--t", "2", "--precision", "64")
    assert code == 2


def test_curve_e2(capsys):
    _, rep, _ = run_json(capsys, "curve", "--t", "2")
    assert rep["result"]["a4"] == "2624072905728"
    assert rep["result"]["torsion"] == "Z/2Z"
    assert rep["result"]["points"][0] == ["123121216", "1366271251712"]


def test_regulator_t4(capsys):
    code, rep, _ = run_json(capsys, "regulator", "--family", "sol1", "--t", "4")
    assert code == 0
    assert abs(float(rep["result"]["regulator"]) / 122787391.171313 - 1) < 1e-6
    assert rep["result"]["independent"]


def test_precision_env(capsys, monkeypatch):
    monkeypatch.setenv("EQUIAREAL_PRECISION", "256")
    _, rep, _ = run_json(capsys, "curve", "--t", "2")
    assert rep["config"]["precision_bits"] == 256


def test_generators(capsys):
    code, rep, _ = run_json(capsys, "generators", "--t", "2")
    assert code == 0
    assert rep["result"]["relations"] == [True] * 5
    assert rep["result"]["relation_matrix"]["det"] == "4"
    assert rep["result"]["starred_matrix"]["unimodular"]


def test_gtcheck(capsys):
    code, rep, _ = run_json(capsys, "gtcheck", "--t", "0")
    assert code == 1 and not rep["result"]["passed"]
    assert "h4 @ 36*prod(h)" in rep["result"]["squares"]
    assert len(rep["result"]["divisors"]) == 1008
    code, rep, _ = run_json(capsys, "gtcheck", "--t", "2", "--primitive-only")
    assert code == 0 and rep["result"]["passed"]


def test_scan_csv(capsys):
    code, out = run(capsys, "scan", "--grid", "1,2/9,0", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert tuple(rows[0].keys()) == CSV_COLUMNS
    assert rows[0]["regulator"] == "0.0" and rows[0]["independent"] == "false"
    assert rows[1]["independent"] == "true"
    assert rows[2]["notes"].startswith("skipped")


def test_scan_empty(capsys):
    code, rep, _ = run_json(capsys, "scan", "--grid", "")
    assert code == 0 and rep["result"]["rows"] == []


def test_scan_order_independent(capsys):
    _, a, _ = run_json(capsys, "scan", "--grid", "2/9,-1/4")
    _, b, _ = run_json(capsys, "scan", "--grid", "-1/4,2/9")
    assert a["result"]["rows"] == b["result"]["rows"][::-1]


def test_scan_parallel_matches_serial(capsys):
    _, a, _ = run_json(capsys, "scan", "--grid", "2/9,-1/4")
    _, b, _ = run_json(capsys, "scan", "--grid", "2/9,-1/4", "--jobs", "2")
    assert a["result"] == b["result"]


@pytest.mark.parametrize("argv", [("curve", "--t", "2"), ("gtcheck", "--t", "3"), ("regulator", "--t", "-1/4")])
def test_json_round_trip(capsys, argv):
    _, rep, out = run_json(capsys, *argv)
    assert dump_json(json.loads(out)) == out


def test_text_and_out_file(capsys, tmp_path):
    target = tmp_path / "r.txt"
    code, out = run(capsys, "curve", "--t", "2", "--format", "text", "--out", str(target))
    assert code == 0 and out == ""
    assert "result.a4: 2624072905728" in target.read_text()


def test_big_integers_are_strings(capsys):
    _, rep, _ = run_json(capsys, "curve", "--family", "sol1", "--t", "4")
    assert isinstance(rep["result"]["a4"], str)
