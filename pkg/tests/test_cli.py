"""Command-line interface: formats, exit codes, cache round trips."""

import json
import subprocess
import sys

import pytest

from gammaenum.cli import main


@pytest.fixture()
def run(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("GAMMAENUM_CACHE", str(tmp_path / "cache"))

    def _run(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run


def test_shadows_text(run):
    code, out, _ = run("shadows", "--genus", "2", "--format", "text")
    assert code == 0
    assert out.strip() == "17*z^4 + 160*z^5 + 566*z^6 + 1004*z^7 + 961*z^8 + 476*z^9 + 96*z^10"


def test_shadows_json(run):
    code, out, _ = run("shadows", "--genus", "1", "--format", "json")
    payload = json.loads(out)
    assert payload["coefficients"] == ["0", "0", "1", "2", "1"]


def test_structures_prefix(run):
    code, out, _ = run("structures", "--gamma", "1", "--tau", "1", "--length", "4",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["coefficients"] == ["1", "1", "1", "2", "5"]


def test_structures_with_one_arcs(run):
    code, out, _ = run("structures", "--gamma", "1", "--tau", "1", "--length", "3",
                       "--with-one-arcs", "--format", "json")
    assert json.loads(out)["coefficients"] == ["1", "1", "2", "4"]


def test_structures_mark_arcs_csv(run):
    code, out, _ = run("structures", "--gamma", "1", "--tau", "1", "--length", "4",
                       "--mark-arcs")
    lines = out.strip().splitlines()
    assert lines[0] == "length,arcs,count"
    assert "3,1,1" in lines  # the single structure {(1,3)} on three vertices


def test_hseries_json_schema(run):
    code, out, _ = run("hseries", "--gamma", "1", "--terms", "3", "--format", "json")
    assert json.loads(out) == {"gamma": 1, "coefficients": ["1", "1", "3", "15"]}


def test_matchings_series(run):
    code, out, _ = run("matchings", "--genus", "1", "--terms", "4")
    assert out.strip() == "0 0 1 10 70"


def test_matchings_table_csv(run):
    code, out, _ = run("matchings", "--table", "--gmax", "1", "--terms", "3")
    lines = out.strip().splitlines()
    assert lines[0] == "genus,arcs,count"
    assert "0,3,5" in lines and "1,3,10" in lines


def test_shapes_csv(run):
    code, out, _ = run("shapes", "--gamma", "1", "--terms", "2")
    lines = out.strip().splitlines()
    assert lines[0] == "arcs,one_arcs,count"
    assert "2,0,1" in lines and "2,2,1" in lines


def test_classify_file(run, tmp_path):
    path = tmp_path / "diagram.txt"
    path.write_text("4\n1-3 2-4\n")
    code, out, _ = run("classify", str(path), "--gamma", "1", "--tau", "1")
    assert code == 0 and out.strip() == "true"
    code, out, _ = run("classify", str(path), "--gamma", "1", "--tau", "2")
    assert code == 0 and out.strip() == "false"


def test_classify_one_arc_flag(run, tmp_path):
    path = tmp_path / "diagram.txt"
    path.write_text("2\n1-2\n")
    code, out, _ = run("classify", str(path), "--gamma", "1", "--tau", "1")
    assert out.strip() == "false"
    code, out, _ = run("classify", str(path), "--gamma", "1", "--tau", "1",
                       "--allow-one-arcs")
    assert out.strip() == "true"


def test_asymptotics_json(run):
    code, out, _ = run("asymptotics", "--gamma", "1", "--tau", "1", "--digits", "5",
                       "--format", "json")
    payload = json.loads(out)
    assert payload["growth"].startswith("3.600")
    assert "error_bound" in payload


def test_usage_error_exit_code(run):
    with pytest.raises(SystemExit) as exc:
        run("shadows")  # missing --genus
    assert exc.value.code == 1


def test_missing_file_is_runtime_error(run):
    code, _, err = run("classify", "/nonexistent/diagram.txt", "--gamma", "1", "--tau", "1")
    assert code == 1 and "error" in err


def test_cache_status_and_clear(run):
    run("shadows", "--genus", "2", "--format", "json")
    code, out, _ = run("cache", "status")
    names = [line.split()[0] for line in out.strip().splitlines()]
    assert "I_1" in names and "I_2" in names
    code, out, _ = run("cache", "clear")
    assert code == 0
    code, out, _ = run("cache", "status")
    assert out.strip() == "cache empty"


def test_config_file(run, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"output_format": "json", "oracle_caps": {"matchings": 8}}))
    code, out, _ = run("--config", str(cfg), "hseries", "--gamma", "1", "--terms", "2")
    assert json.loads(out)["coefficients"] == ["1", "1", "3"]


def test_console_script_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "gammaenum.cli", "--help"], capture_output=True, text=True
    )
    assert result.returncode == 0
    assert "shadows" in result.stdout
