import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from asua.cli.commands import app

DATA = Path(__file__).resolve().parent.parent / "data"

runner = CliRunner()


@pytest.fixture(autouse=True)
def config_file(tmp_path, monkeypatch):
    """Point the config loader at an empty temp location."""
    path = tmp_path / "config.json"
    monkeypatch.setattr("asua.config.loader.get_config_path", lambda: path)
    return path


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_version():
    result = runner.invoke(app, ["--version"])
    assert result.exit_code == 0
    assert "asua v" in result.stdout


# --- solve ---

def test_solve_intro_matrix():
    result = runner.invoke(app, ["solve", str(DATA / "intro.matrix")])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0].startswith("v1\t13/1\t")
    assert lines[1].startswith("v2\t14/1\t")
    assert lines[4] == "v5\t0/1\t0.000000000000"


def test_solve_single_edge_exact_output(tmp_path):
    path = _write(tmp_path, "p2.g", "vertices 2\nabsorb 2\n1 2\n")
    result = runner.invoke(app, ["solve", path])
    assert result.exit_code == 0
    assert result.stdout == "v1\t1/1\t1.000000000000\nv2\t0/1\t0.000000000000\n"


def test_solve_check_reports_zero_residual():
    result = runner.invoke(app, ["solve", str(DATA / "path5.g"), "--check"])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[-1] == "max_residual\t0"


def test_solve_json():
    result = runner.invoke(app, ["solve", str(DATA / "path5.g"), "--format", "json"])
    assert result.exit_code == 0
    records = json.loads(result.stdout)
    assert records[0] == {
        "vertex": 1,
        "absorbing": False,
        "rational": "16/1",
        "decimal": "16.000000000000",
    }
    assert records[4]["absorbing"] is True


def test_solve_float():
    result = runner.invoke(app, ["solve", str(DATA / "path5.g"), "--float", "--digits", "3"])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == "v1\t16.000"


def test_solve_unknown_format():
    result = runner.invoke(app, ["solve", str(DATA / "path5.g"), "--format", "xml"])
    assert result.exit_code == 2


def test_solve_stranded_vertex_exits_3(tmp_path):
    path = _write(tmp_path, "split.g", "vertices 4\nabsorb 1\n1 2\n3 4\n")
    result = runner.invoke(app, ["solve", path])
    assert result.exit_code == 3


def test_solve_parse_error_exits_2(tmp_path):
    path = _write(tmp_path, "bad.g", "vertices two\n")
    result = runner.invoke(app, ["solve", path])
    assert result.exit_code == 2


def test_solve_zero_vertex_id_is_a_parse_error(tmp_path):
    path = _write(tmp_path, "zero.g", "vertices 2\nabsorb 2\n0 2\n")
    result = runner.invoke(app, ["solve", path])
    assert result.exit_code == 2


# --- formula ---

@pytest.mark.parametrize(
    "args, expected",
    [
        (["cycle", "6", "3"], "9"),
        (["path", "5", "1"], "16"),
        (["sd1", "5", "2,3", "--all"], "26 25 20 11"),
    ],
)
def test_formula(args, expected):
    result = runner.invoke(app, ["formula", *args])
    assert result.exit_code == 0
    assert result.stdout.strip() == expected


def test_formula_rejects_leaf_at_first_vertex():
    result = runner.invoke(app, ["formula", "sd1", "5", "1,3", "2"])
    assert result.exit_code == 3


def test_formula_needs_an_index():
    result = runner.invoke(app, ["formula", "path", "5"])
    assert result.exit_code == 3


# --- verify ---

def test_verify_path_sweep():
    result = runner.invoke(app, ["verify", "path", "--n", "2..50"])
    assert result.exit_code == 0
    assert "path" in result.stdout


def test_verify_printed_constant_does_not_fail():
    result = runner.invoke(
        app, ["verify", "sd2", "--n", "4..8", "--d", "1..5", "--sd23-printed-constant"]
    )
    assert result.exit_code == 0
    assert "100/100" in result.stdout


def test_verify_mismatch_exits_1(monkeypatch):
    monkeypatch.setattr("asua.verify.sweeps.path_asua", lambda n, i: 0)
    result = runner.invoke(app, ["verify", "path", "--n", "2..6"])
    assert result.exit_code == 1
    assert "PATH_2" in result.stdout


def test_verify_bad_range_exits_2():
    result = runner.invoke(app, ["verify", "path", "--n", "9..3"])
    assert result.exit_code == 2


# --- survey ---

def test_survey_all_conventions():
    result = runner.invoke(app, ["survey", "--n", "4", "--absorber", "all", "--no-trees"])
    assert result.exit_code == 0
    assert "t_σ (each): low 3" in result.stdout
    assert "high 22" in result.stdout
    assert "t′ (diameter)" in result.stdout


def test_survey_unknown_convention():
    result = runner.invoke(app, ["survey", "--absorber", "median"])
    assert result.exit_code == 2


# --- simulate ---

def test_simulate_compare():
    result = runner.invoke(
        app, ["simulate", str(DATA / "path5.g"), "--start", "1", "--walks", "20000", "--compare"]
    )
    assert result.exit_code == 0
    assert "exact\t16" in result.stdout
    assert "within_4_stderr\tyes" in result.stdout


def test_simulate_from_absorbing_vertex_exits_3():
    result = runner.invoke(app, ["simulate", str(DATA / "path5.g"), "--start", "5"])
    assert result.exit_code == 3


# --- maze ---

def test_maze_grid():
    result = runner.invoke(app, ["maze", str(DATA / "demo.maze")])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert len(lines) == 4
    assert "####" in lines[1]


def test_maze_illegal_character_exits_2(tmp_path):
    path = _write(tmp_path, "bad.maze", "..X\n.T.\n")
    result = runner.invoke(app, ["maze", path])
    assert result.exit_code == 2


# --- generate ---

def test_generate_sd3():
    result = runner.invoke(app, ["generate", "sd3", "5", "2", "2"])
    assert result.exit_code == 0
    assert result.stdout.startswith("# T(5,2^(2))\nvertices 7\nabsorb 5\n")


def test_generate_to_file_round_trips_through_solve(tmp_path):
    out = tmp_path / "c6.g"
    result = runner.invoke(app, ["generate", "cycle", "6", "--output", str(out)])
    assert result.exit_code == 0
    solved = runner.invoke(app, ["solve", str(out)])
    assert solved.stdout.splitlines()[2].startswith("v3\t9/1")


# --- config ---

def test_config_init_and_show(config_file):
    result = runner.invoke(app, ["config", "init"])
    assert result.exit_code == 0
    assert config_file.exists()

    again = runner.invoke(app, ["config", "init"])
    assert again.exit_code == 1

    forced = runner.invoke(app, ["config", "init", "--force"])
    assert forced.exit_code == 0

    shown = runner.invoke(app, ["config", "show"])
    assert shown.exit_code == 0
    assert "decimalDigits" in shown.stdout


def test_config_file_sets_output_digits(config_file):
    config_file.write_text(json.dumps({"output": {"decimalDigits": 2}}))
    result = runner.invoke(app, ["solve", str(DATA / "path5.g")])
    assert result.stdout.splitlines()[0] == "v1\t16/1\t16.00"


def test_verbose_flag_is_accepted():
    result = runner.invoke(app, ["--verbose", "formula", "path", "3", "1"])
    assert result.exit_code == 0
    assert result.stdout.strip() == "4"


# --- json output ---

def _json(args):
    result = runner.invoke(app, args)
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


def test_global_format_applies_to_verify():
    reports = _json(["--format", "json", "verify", "path", "--n", "2..10"])
    assert len(reports) == 1
    assert reports[0]["family"] == "path"
    assert reports[0]["ok"] is True
    assert reports[0]["instances"] == 9
    assert reports[0]["mismatches"] == []


def test_verify_json_mismatch_still_exits_1(monkeypatch):
    monkeypatch.setattr("asua.verify.sweeps.path_asua", lambda n, i: 0)
    result = runner.invoke(app, ["--format", "json", "verify", "path", "--n", "2..4"])
    assert result.exit_code == 1
    report = json.loads(result.stdout)[0]
    assert report["ok"] is False
    assert report["mismatches"][0] == {"instance": "PATH_2", "vertex": 1, "expected": 0, "actual": 1}


def test_survey_json_without_trees():
    records = _json(["--format", "json", "survey", "--n", "4", "--absorber", "each", "--no-trees"])
    record = records[0]
    assert (record["order"], record["tree_count"]) == (4, 2)
    assert "trees" not in record
    each = record["t_sigma"]["each"]
    assert (each["low"], each["high"]) == (3, 22)
    assert each["star_attains_low"] is True
    assert set(record["round_trip"]) == {"max", "diameter"}


def test_command_format_overrides_global():
    records = _json(["--format", "tsv", "survey", "--n", "3", "--format", "json"])
    assert records[0]["trees"][0]["is_path"] is True


def test_simulate_json():
    record = _json(
        ["--format", "json", "simulate", str(DATA / "path5.g"), "-s", "1", "-w", "5000", "--compare"]
    )
    assert record["completed"] == 5000
    assert record["capped"] == 0
    assert record["exact"] == 16
    assert record["within_4_stderr"] is True


def test_maze_json():
    records = _json(["--format", "json", "maze", str(DATA / "grid2x3.maze")])
    by_cell = {(r["row"], r["col"]): r for r in records}
    assert len(records) == 6
    assert by_cell[(0, 2)]["rational"] == "49/5"
    assert by_cell[(0, 2)]["decimal"] == "9.800"
    assert by_cell[(1, 0)]["target"] is True
    assert by_cell[(1, 0)]["rational"] == "0/1"


def test_formula_json():
    record = _json(["--format", "json", "formula", "sd1", "5", "2,3", "--all"])
    assert [v["value"] for v in record["values"]] == [26, 25, 20, 11]
    assert record["values"][0]["index"] == 1


def test_generate_json():
    record = _json(["--format", "json", "generate", "path", "3"])
    assert record == {"label": "path n=3", "vertices": 3, "absorb": [3], "edges": [[1, 2, 1], [2, 3, 1]]}


def test_solve_json_with_check():
    record = _json(["--format", "json", "solve", str(DATA / "path5.g"), "--check"])
    assert record["max_residual"] == 0
    assert record["values"][0]["rational"] == "16/1"


def test_config_file_sets_default_format(config_file):
    config_file.write_text(json.dumps({"output": {"format": "json"}}))
    record = _json(["formula", "cycle", "6", "3"])
    assert record["values"] == [{"index": 3, "value": 9}]


def test_unknown_global_format_exits_2():
    result = runner.invoke(app, ["--format", "xml", "formula", "path", "3", "1"])
    assert result.exit_code == 2
