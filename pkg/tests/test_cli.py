"""CLI behavior: parsing, formats, exit codes, determinism."""

import json
import math

import pytest

from estrada import cli
from estrada.cli import main
from estrada.families import cycle
from estrada.harness import Violation, verify_collection
from estrada.reports import CSV_BASE_COLUMNS, CSV_COLUMNS, csv_header


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_inline_json(capsys):
    code, out, err = run(
        ["compute", "--graph6", "A_", "--format", "json"], capsys
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["version"] == "1"
    (row,) = doc["rows"]
    assert row["graph6"] == "A_"
    assert row["n"] == 2 and row["m"] == 1
    assert abs(row["ee"] - 2.0 * math.cosh(1.0)) < 1e-9
    assert "bounds" not in row


def test_compute_inline_table_and_csv(capsys):
    code, out, _ = run(["compute", "--graph6", "A_"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split()[:3] == ["graph6", "n", "m"]
    assert lines[1].startswith("A_")

    code, out, _ = run(["compute", "--graph6", "A_", "--format", "csv"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == ",".join(CSV_BASE_COLUMNS)
    assert len(lines) == 2
    assert len(lines[1].split(",")) == len(CSV_BASE_COLUMNS)


def test_compute_g6_file(tmp_path, capsys):
    f = tmp_path / "graphs.g6"
    f.write_text(">>graph6<<\nCl\nA_\n")
    code, out, _ = run(
        ["compute", "--file", str(f), "--format", "csv"], capsys
    )
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 3
    assert lines[1].split(",")[0] == "Cl"
    assert lines[2].split(",")[0] == "A_"


def test_compute_edge_list_file(tmp_path, capsys):
    f = tmp_path / "tiny.el"
    f.write_text("# a short path\n3 2\n0 1\n1 2\n")
    code, out, _ = run(
        ["compute", "--file", str(f), "--format", "json"], capsys
    )
    assert code == 0
    (row,) = json.loads(out)["rows"]
    assert (row["n"], row["m"], row["diam"]) == (3, 2, 2)


def test_input_format_override(tmp_path, capsys):
    f = tmp_path / "plain.txt"
    f.write_text("Cl\n")
    code, _, err = run(["compute", "--file", str(f)], capsys)
    assert code == 1
    assert "cannot sniff" in err

    code, out, _ = run(
        ["compute", "--file", str(f), "--input-format", "g6", "--format", "csv"],
        capsys,
    )
    assert code == 0
    assert out.splitlines()[1].split(",")[0] == "Cl"


@pytest.mark.parametrize(
    "argv",
    [
        ["compute"],  # neither input
        ["compute", "--graph6", "A_", "--file", "x.g6"],  # both inputs
        ["compute", "--graph6", "A"],  # truncated graph6 payload
        ["compute", "--file", "/no/such/file.g6"],
        ["compute", "--graph6", "A_", "--tol", "0"],
        ["compute", "--graph6", "A_", "--tol", "-1"],
        ["compute", "--graph6", "A_", "--no-such-flag"],
        ["no-such-command"],
        ["sweep", "--family", "star"],  # missing --param
        ["sweep", "--family", "nope", "--param", "n=3"],
        ["sweep", "--family", "star", "--param", "n"],
        ["sweep", "--family", "star", "--param", "n="],
        ["sweep", "--family", "star", "--param", "n=a..b"],
        ["sweep", "--family", "star", "--param", "n=5..3"],
        ["exhaustive", "--max-n", "9"],
        ["equality-cases", "--bound", "Q1", "--max-n", "3"],
    ],
)
def test_exit_code_one(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 1
    assert err


def test_no_command_prints_usage(capsys):
    code, _, err = run([], capsys)
    assert code == 1
    assert "usage" in err.lower()


def test_bad_edge_list_exits_one(tmp_path, capsys):
    f = tmp_path / "bad.el"
    f.write_text("2 1\n0 1\n1 0\n")  # duplicate edge, count mismatch
    code, _, err = run(["compute", "--file", str(f)], capsys)
    assert code == 1
    assert "error:" in err


def test_violation_exit_code_two(monkeypatch, capsys):
    report = verify_collection([cycle(4)], keep_rows=True)
    report.summaries["B6"].violations = 1
    report.violations.append(Violation("Cl", "B6", -1.0))
    monkeypatch.setattr(
        cli.harness, "verify_collection", lambda *a, **k: report
    )
    code, out, err = run(["check-bounds", "--graph6", "Cl"], capsys)
    assert code == 2
    assert "VIOLATION bound=B6 graph6=Cl gap=-1.0" in err
    assert out  # summary table still printed


def test_check_bounds_table_and_json(capsys):
    code, out, _ = run(["check-bounds", "--graph6", "Cl"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split()[:4] == ["bound", "applicable", "held", "violations"]
    assert len(lines) == 1 + 14

    code, out, _ = run(
        ["check-bounds", "--graph6", "Cl", "--format", "json"], capsys
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["row_count"] == 1
    assert doc["summary"]["B6"]["equality"] == 1
    assert doc["corpus"] == {"kind": "check-bounds", "count": 1}


def test_sweep_star_table(capsys):
    code, out, err = run(
        ["sweep", "--family", "star", "--param", "n=3..8"], capsys
    )
    assert code == 0 and not err
    lines = out.splitlines()
    assert lines[0].split() == ["graph6", "n", "m", "ee", "equality"]
    assert len(lines) == 1 + 6
    for line in lines[1:]:
        hits = line.split()[-1]
        assert "B2" in hits and "B4" in hits


def test_sweep_param_forms(capsys):
    code, out, _ = run(
        [
            "sweep",
            "--family",
            "complete_bipartite",
            "--param",
            "p=1,2",
            "--param",
            "q=2..3",
            "--format",
            "csv",
        ],
        capsys,
    )
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 1 + 4
    ns = [int(line.split(",")[1]) for line in lines[1:]]
    assert ns == [3, 4, 4, 5]  # (1,2) (1,3) (2,2) (2,3)

    code, out, _ = run(
        [
            "sweep",
            "--family",
            "regular_circulant",
            "--param",
            "n=6..8",
            "--param",
            "r=2",
            "--format",
            "csv",
        ],
        capsys,
    )
    assert code == 0
    assert len(out.splitlines()) == 1 + 3

    code, out, _ = run(
        ["sweep", "--family", "complete", "--param", "n=4", "--format", "csv"],
        capsys,
    )
    assert code == 0
    assert len(out.splitlines()) == 2


def test_exhaustive_csv_streams_full_schema(capsys):
    code, out, err = run(
        ["exhaustive", "--max-n", "3", "--format", "csv"], capsys
    )
    assert code == 0 and not err
    lines = out.splitlines()
    assert lines[0] == csv_header()
    assert len(lines) == 1 + 11
    for line in lines[1:]:
        assert len(line.split(",")) == len(CSV_COLUMNS)
    assert lines[1].split(",")[0] == "@"


def test_exhaustive_json_and_table(capsys):
    code, out, _ = run(
        ["exhaustive", "--max-n", "3", "--format", "json"], capsys
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["row_count"] == 11
    assert doc["violations"] == []

    code, out, _ = run(["exhaustive", "--max-n", "3"], capsys)
    assert code == 0
    first = out.splitlines()[0]
    assert first == "exhaustive max_n=3 mode=all rows=11 violations=0"


def test_exhaustive_mode_flag(capsys):
    code, out, _ = run(
        ["exhaustive", "--max-n", "4", "--mode", "connected", "--format", "json"],
        capsys,
    )
    assert code == 0
    assert json.loads(out)["row_count"] == 1 + 1 + 4 + 38


def test_equality_cases_formats(capsys):
    code, out, err = run(
        ["equality-cases", "--bound", "B6", "--max-n", "4"], capsys
    )
    assert code == 0
    assert sorted(out.split()) == ["C]", "Cl", "Cr"]
    assert "3 equality case(s) for B6" in err

    code, out, _ = run(
        ["equality-cases", "--bound", "B6", "--max-n", "4", "--format", "csv"],
        capsys,
    )
    assert code == 0
    assert out.splitlines()[0] == "graph6"
    assert len(out.splitlines()) == 4

    code, out, _ = run(
        ["equality-cases", "--bound", "G5", "--max-n", "4", "--format", "json"],
        capsys,
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["bound"] == "G5"
    assert doc["cases"] == ["A?", "B?", "C?"]


def test_random_json_deterministic(capsys):
    argv = ["random", "--trials", "5", "--seed", "3", "--format", "json"]
    code, out1, _ = run(argv, capsys)
    assert code == 0
    code, out2, _ = run(argv, capsys)
    assert code == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["row_count"] == 5
    assert doc["corpus"]["seed"] == 3


def test_random_csv_and_bipartite(capsys):
    code, out, _ = run(
        ["random", "--trials", "4", "--seed", "1", "--format", "csv"], capsys
    )
    assert code == 0
    assert len(out.splitlines()) == 1 + 4

    code, out, _ = run(
        [
            "random",
            "--model",
            "bipartite",
            "--parts",
            "4",
            "5",
            "--trials",
            "3",
            "--seed",
            "2",
            "--format",
            "json",
        ],
        capsys,
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["corpus"]["parts"] == [4, 5]
    assert doc["row_count"] == 3


def test_bad_jobs_environment(monkeypatch, capsys):
    monkeypatch.setenv("ESTRADA_JOBS", "x")
    code, _, err = run(["exhaustive", "--max-n", "3"], capsys)
    assert code == 1
    assert "ESTRADA_JOBS" in err


def test_jobs_flag_overrides_environment(monkeypatch, capsys):
    monkeypatch.setenv("ESTRADA_JOBS", "x")
    code, _, _ = run(["exhaustive", "--max-n", "3", "--jobs", "2"], capsys)
    assert code == 0
