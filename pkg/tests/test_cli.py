import json
import subprocess
import sys

import pytest

from sklyanin_points.cli import main
from sklyanin_points.relations import default_relations
from sklyanin_points.report import (
    ROW_FIELDS, RunConfig, compute_row, format_rows, parse_rows, run_verify,
)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_json_round_trip():
    rows = [compute_row(d) for d in range(1, 5)]
    text = format_rows(rows, "json")
    assert json.loads(text)["version"]
    assert parse_rows(text) == rows


def test_csv_header_and_booleans(capsys):
    code, out, _ = run(capsys, "dims", "--max-d", "2", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == ",".join(ROW_FIELDS)
    assert lines[1] == "1,3,1,3,1,3,3,3,true"


def test_dims_table(capsys):
    code, out, _ = run(capsys, "dims", "--max-d", "4")
    assert code == 0
    assert out.splitlines()[-1].split() == ["4", "24", "12", "24", "6", "18", "24", "18", "True"]


def test_dims_guard(capsys):
    code, _, err = run(capsys, "dims", "--max-d", "7")
    assert code == 2 and "--expensive" in err
    with pytest.raises(ValueError):
        RunConfig(max_d=0)


def test_verify_minimal_and_deterministic(tmp_path, capsys):
    code1, out1, _ = run(capsys, "verify", "--max-d", "1")
    code2, out2, _ = run(capsys, "verify", "--max-d", "1")
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1.rstrip().endswith("ALL CHECKS PASSED")


def test_verify_out_file(tmp_path, capsys):
    target = tmp_path / "deep" / "cert.txt"
    code, out, _ = run(capsys, "verify", "--d", "3", "--out", str(target))
    assert code == 0 and out == ""
    assert "ALL CHECKS PASSED" in target.read_text()


def test_corrupted_relations_fail(tmp_path, capsys):
    data = default_relations().to_json()
    data["f"][0][0] = "0"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", "--relations", str(path))
    assert code != 0
    assert "first failure: validate_relations" in out
    code, _, _ = run(capsys, "det-cubic", "--relations", str(path))
    assert code == 1


def test_scaled_relations_pass():
    R = default_relations().scaled(7)
    code, text = run_verify(RunConfig(max_d=3, relations=R))
    assert code == 0, text


def test_components(capsys):
    code, out, _ = run(capsys, "components", "--d", "2")
    assert code == 0
    assert out.splitlines()[0] == "PA1 × pa"
    assert len(out.splitlines()) == 6
    code, out, _ = run(capsys, "components", "--d", "4", "--scheme", "W", "--json")
    data = json.loads(out)
    assert data["scheme"] == "W" and len(data["components"]) == 6


def test_paths(capsys):
    code, out, _ = run(capsys, "paths", "--quiver", "Qprime", "--d", "3")
    assert out.splitlines() == [
        "LineA->PtA->LineA", "PtA->LineA->PtA", "PtB->LineB->PtB",
        "PtC->LineC->PtC", "LineB->PtB->LineB", "LineC->PtC->LineC",
    ]
    code, out, _ = run(capsys, "paths", "--d", "3")
    assert len(out.splitlines()) == 30


def test_det_cubic(capsys):
    code, out, _ = run(capsys, "det-cubic")
    assert code == 0
    assert out.splitlines()[0] == "det M = -x^3 + 3*x*y*z - y^3 - z^3"
    assert "factor PB1: x + (-1-1*z)*y + (0+1*z)*z = 0" in out


def test_bad_arguments(capsys):
    with pytest.raises(SystemExit):
        main(["components", "--d", "0"])
    code, _, err = run(capsys, "dims", "--relations", "/nonexistent/r.json")
    assert code == 2 and "error" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "sklyanin_points", "paths", "--d", "1"],
                          capture_output=True, text=True, check=True)
    assert len(proc.stdout.splitlines()) == 6
