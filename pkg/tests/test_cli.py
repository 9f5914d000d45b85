"""Command-line interface: exit codes, JSON round trips, SVG output."""

import json

import pytest

from crystref.cli import run


def test_info_and_exit_codes(capsys):
    assert run(["info", "[G(6,3,2)]_2"]) == 0
    out = capsys.readouterr().out
    assert "[G(6,3,2)]_2" in out and "Z[2x]" in out
    assert run(["info", "[G(9,9,9)]_1"]) == 2
    assert run(["info", "G(6,3,2):2"]) == 0


def test_info_json_round_trip(capsys):
    assert run(["info", "[G(2,1,3)]^a_5", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["name"] == "[G(2,1,3)]^a_5"
    assert data["steinberg"] is False
    assert data["lattice"]["rank"] == 6
    assert "counterexample" in data


def test_counterexample_command(capsys):
    assert run(["counterexample", "[G(6,3,2)]_2"]) == 0
    assert "PASS" in capsys.readouterr().out
    # a group satisfying the property is a usage error here
    assert run(["counterexample", "[G(4,1,2)]_1"]) == 2


def test_check_command(capsys):
    assert run(["check", "[G(4,1,2)]_2", "-B", "1", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["violation_count"] == 0 and data["exhaustive"]
    # violations in a failing group are expected: still exit 0
    assert run(["check", "[G(3,1,2)]_2", "-B", "1", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["violation_count"] > 0
    assert data["mismatch"] is False


def test_reflections_command(capsys):
    assert run(["reflections", "[G(6,2,2)]_2", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    forms = {f["form"] for f in data["families"]}
    assert "x1" in forms and "x1 - x2" in forms
    assert run(["reflections", "[G(4,1,1)]_1", "-R", "2", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["window"]["hyperplane_points"]) == 81


def test_plot_command(tmp_path, capsys):
    out = tmp_path / "win.svg"
    assert run(["plot", "[G(4,1,1)]_1", "-R", "2", "--out", str(out)]) == 0
    svg = out.read_text()
    assert svg.startswith("<svg")
    assert svg.count('r="5"') == 25      # lattice dots
    assert svg.count('r="2"') == 81      # mirror dots
    assert 'viewBox="-250.0 -250.0 500.0 500.0"' in svg
    assert run(["plot", "[G(4,1,2)]_1", "--out", str(out)]) == 2


def test_table_command_sampled(capsys):
    # a small budget keeps the run quick; verdicts still match the tables
    assert run(["table", "--budget", "3000", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["all_match"] is True
    assert len(data["rows"]) == 31
    by_name = {r["group"]: r for r in data["rows"]}
    assert by_name["[G(6,3,2)]_2"]["computed"] is False
    assert by_name["[G(6,3,2)]_2"]["method"] == "counterexample"
    assert by_name["[G(4,2,2)]_3"]["computed"] is True


def test_table_parallel_rows_match_sequential(capsys):
    assert run(["table", "--budget", "2000", "--jobs", "4", "--json"]) == 0
    parallel = json.loads(capsys.readouterr().out)
    assert run(["table", "--budget", "2000", "--json"]) == 0
    sequential = json.loads(capsys.readouterr().out)
    strip = [(r["group"], r["expected"], r["computed"], r["match"])
             for r in parallel["rows"]]
    assert strip == [(r["group"], r["expected"], r["computed"], r["match"])
                     for r in sequential["rows"]]


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        run(["definitely-not-a-command"])
    assert exc.value.code == 2
