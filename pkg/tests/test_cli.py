import os

import pytest

from conftest import data_path
from packedge.cli import main, run_suite


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


def test_solve_exit_codes(capsys, tmp_path):
    g1 = data_path("g1.graph")
    cert = tmp_path / "g1.cert"
    assert run(capsys, "solve", g1, "--spec", "1,1,2,2", "--cert", cert)[0] == 0
    assert cert.exists()
    code, out = run(capsys, "solve", g1, "--spec", "1,2,2,2")
    assert code == 1 and out.startswith("verdict not-colorable")
    assert run(capsys, "solve", data_path("g2_6.graph"), "--spec", "1,2,2,2", "--budget", "2")[0] == 2


def test_parse_errors_exit_3(capsys, tmp_path):
    bad = tmp_path / "bad.graph"
    bad.write_text("p multigraph 2 1\ne 0 0\n")
    assert run(capsys, "stats", bad)[0] == 3
    assert run(capsys, "stats", tmp_path / "missing.graph")[0] == 3
    assert run(capsys, "solve", data_path("g1.graph"), "--spec", "1,x")[0] == 3
    assert run(capsys, "frobnicate")[0] == 3
    junk = tmp_path / "junk.cert"
    junk.write_text("nonsense\n")
    assert run(capsys, "check", data_path("g1.graph"), junk)[0] == 3


def test_stats(capsys):
    out = run(capsys, "stats", data_path("c5.graph"))[1]
    assert "girth 5\n" in out and "mad 2/1\n" in out
    assert "3-irregular true" in run(capsys, "stats", data_path("g1.graph"))[1]
    assert "girth 5\n" in run(capsys, "stats", data_path("g3.graph"))[1]


def test_check_detects_tampering(capsys, tmp_path):
    g1 = data_path("g1.graph")
    assert run(capsys, "check", g1, data_path("g1_solve.cert"))[0] == 0
    text = open(data_path("g1_solve.cert")).read()
    tampered = tmp_path / "t.cert"
    tampered.write_text(text.replace("2_a", "2_b"))
    code, out = run(capsys, "check", g1, tampered)
    assert code == 1 and out.startswith("V distance")
    # edges 0 and 1 both end at u
    adjacent = tmp_path / "adj.cert"
    adjacent.write_text(text.replace("a 1 1_b", "a 1 1_a"))
    code, out = run(capsys, "check", g1, adjacent)
    assert code == 1 and "V distance 0 1" in out


@pytest.mark.parametrize("command,graph,good", [
    ("solve", "g1.graph", False),
    ("color-t1", "rand12_irregular.graph", False),
    ("color-t2", "sparse23.graph", True),
    ("color-t2", "planar_girth20.graph", True),
])
def test_check_accepts_produced_certificates(capsys, tmp_path, command, graph, good):
    cert = tmp_path / "out.cert"
    assert run(capsys, command, data_path(graph), "--cert", cert)[0] == 0
    extra = ["--good"] if good else []
    assert run(capsys, "check", data_path(graph), cert, *extra)[0] == 0


def test_color_t1_trace(capsys, tmp_path):
    trace = tmp_path / "moves.log"
    assert run(capsys, "color-t1", data_path("rand12_irregular.graph"), "--trace", trace)[0] == 0
    lines = trace.read_text().splitlines()
    assert lines and all(" M1-=" in line for line in lines)


def test_color_t1_rejects_wrong_class(capsys):
    code, out = run(capsys, "color-t1", data_path("g3.graph"))
    assert code == 1 and out.startswith("error")


def test_audit_output(capsys):
    code, out = run(capsys, "audit", data_path("g1.graph"), "--rule", "thread-1/9")
    assert code == 0
    assert out.splitlines()[0] == "v 0 -2/9 0/1"
    assert run(capsys, "audit", data_path("c5.graph"))[0] == 1


def test_gen_is_deterministic(capsys, tmp_path):
    out = tmp_path / "a.graph"
    run(capsys, "gen", "rand:15:4", "-o", out)
    assert run(capsys, "gen", "rand:15:4")[1] == out.read_text()
    assert run(capsys, "gen", "rand:15", "--seed", "4")[1] == out.read_text()
    assert run(capsys, "gen", "g2:4")[1].startswith("p multigraph 16")
    assert run(capsys, "gen", "nosuch")[0] == 3


def test_quiet(capsys):
    code, out = run(capsys, "stats", data_path("g1.graph"), "--quiet")
    assert code == 0 and out == ""


def test_shipped_suite_passes(tmp_path):
    records = run_suite(data_path("acceptance.suite"), str(tmp_path))
    assert records and all(r.passed for r in records)
    for r in records:
        if r.cert != "-":
            assert os.path.exists(r.cert)


def test_empty_suite(capsys, tmp_path):
    suite = tmp_path / "empty.suite"
    suite.write_text("# nothing\n")
    report = tmp_path / "report.txt"
    assert run(capsys, "suite", suite, "--report", report)[0] == 0
    assert report.read_text() == ""


def test_wrong_expectation_fails(capsys, tmp_path):
    suite = tmp_path / "wrong.suite"
    suite.write_text(f"run solve {data_path('g1.graph')} --spec 1,1,2 expect colorable\n")
    code, out = run(capsys, "suite", suite, "--cert-dir", tmp_path)
    assert code == 1 and "FAIL" in out


def test_report_is_stable_modulo_time(capsys, tmp_path):
    reports = []
    for i in range(2):
        path = tmp_path / f"r{i}.txt"
        main(["suite", data_path("acceptance.suite"), "--cert-dir", str(tmp_path / "c"), "--report", str(path)])
        reports.append([line.rsplit("\t", 1)[0] for line in path.read_text().splitlines()])
    capsys.readouterr()
    assert reports[0] == reports[1]
