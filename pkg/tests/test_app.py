"""Unit tests for app.py."""

import argparse
import json
import logging
from pathlib import Path

import pytest
from gv_bounds import app
from gv_bounds.constants import DEFAULT_CURVE_STEP, EXIT_BUDGET, EXIT_INVALID, EXIT_OK


def run(argv: list[str]) -> int:
    """Parse arguments and run the application."""
    return app.run_app(app.handle_args(argv))


def test_int_values() -> None:
    """Test integer range parsing."""
    assert app.int_values("4") == (4,)
    assert app.int_values("4..6") == (4, 5, 6)
    assert app.int_values("3,5") == (3, 5)
    with pytest.raises(argparse.ArgumentTypeError):
        app.int_values("x")
    with pytest.raises(argparse.ArgumentTypeError):
        app.int_values("6..4")


def test_delta_range() -> None:
    """Test curve range parsing."""
    assert app.delta_range("0.1:0.2") == (0.1, 0.2, DEFAULT_CURVE_STEP)
    assert app.delta_range("0.1:0.2:0.05") == (0.1, 0.2, 0.05)
    with pytest.raises(argparse.ArgumentTypeError):
        app.delta_range("0.1")


def test_handle_args_verbosity() -> None:
    """Test that -vv sets debug logging."""
    args = app.handle_args(["bounds", "-vv", "--n", "4", "--d", "3"])

    assert args.command == "bounds"
    assert args.n == (4,)
    assert args.q == (2,)
    assert logging.getLogger("gv_bounds.app").level == logging.DEBUG


def test_bounds_csv(capsys: pytest.CaptureFixture[str]) -> None:
    """Test the bound table on standard output."""
    assert run(["bounds", "--n", "4", "--d", "3"]) == EXIT_OK

    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("n,d,q,w,formula")
    assert lines[-1].startswith("4,3,2,,BEST,")


def test_bounds_json_to_file(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """Test the bound table written as JSON to a file."""
    path = tmp_path / "table.json"

    assert run(["bounds", "--n", "4..5", "--d", "3", "--format", "json", "--out", str(path)]) == EXIT_OK

    records = json.loads(path.read_text(encoding="utf-8"))
    assert {record["n"] for record in records} == {4, 5}
    assert capsys.readouterr().out == ""


@pytest.mark.parametrize(
    "argv",
    [
        ["bounds", "--n", "3", "--d", "5"],
        ["bounds", "--d", "3"],
        ["construct", "--n", "4..5", "--d", "3"],
        ["asym", "--epsilon", "0.5"],
        ["verify", "--codebook", "missing.txt"],
        ["bounds", "--n", "4", "--d", "3", "--budget", "0"],
    ],
)
def test_invalid_requests_exit_with_usage_status(argv: list[str], tmp_path: Path) -> None:
    """Test that invalid requests give the invalid-parameter exit status."""
    if argv[0] == "verify":
        argv = ["verify", "--codebook", str(tmp_path / argv[2])]
    assert run(argv) == EXIT_INVALID


def test_budget_exceeded_exit_status() -> None:
    """Test that exceeding the vertex budget gives its own exit status."""
    assert run(["construct", "--n", "12", "--d", "3", "--budget", "100"]) == EXIT_BUDGET


def test_sphere_with_oracle(capsys: pytest.CaptureFixture[str]) -> None:
    """Test that closed forms agree with the explicit sphere graph."""
    assert run(["sphere", "--n", "4", "--d", "3", "--oracle"]) == EXIT_OK

    out = capsys.readouterr().out
    lines = out.splitlines()
    assert lines[0] == "n,d,q,w,quantity,closed_form,oracle,status"
    assert "4,3,2,,vertices,10,10,PASS" in lines
    assert "4,3,2,,degree_w1,6,6,PASS" in lines
    assert "4,3,2,,edges,30,30,PASS" in lines
    assert "4,3,2,,gilbert_triangles,160,160,PASS" in lines
    assert ",FAIL" not in out


def test_sphere_constant_weight(capsys: pytest.CaptureFixture[str]) -> None:
    """Test the constant-weight sphere graph rows."""
    assert run(["sphere", "--n", "6", "--d", "2", "--w", "2", "--oracle", "--format", "json"]) == EXIT_OK

    records = {record["quantity"]: record for record in json.loads(capsys.readouterr().out)}
    assert records["vertices"]["closed_form"] == 8
    assert records["edges"]["oracle"] == 16
    assert records["edges"]["status"] == "PASS"
    assert records["sparse_bound_log2"]["status"] == "INFO"


def test_sphere_without_oracle(capsys: pytest.CaptureFixture[str]) -> None:
    """Test that oracle columns are skipped unless requested."""
    assert run(["sphere", "--n", "20", "--d", "5"]) == EXIT_OK

    lines = capsys.readouterr().out.splitlines()
    assert "20,5,2,,vertices,6195,,SKIPPED" in lines


def test_asym(capsys: pytest.CaptureFixture[str]) -> None:
    """Test the curves on standard output and the threshold summary on standard error."""
    assert run(["asym", "--range", "0.1:0.5:0.1"]) == EXIT_OK

    captured = capsys.readouterr()
    assert len(captured.out.splitlines()) == 6
    assert "binding=g" in captured.err
    assert "threshold=0.499" in captured.err


def test_construct_greedy(capsys: pytest.CaptureFixture[str]) -> None:
    """Test the lexicode on standard output."""
    assert run(["construct", "--n", "5", "--d", "3"]) == EXIT_OK

    captured = capsys.readouterr()
    assert captured.out.splitlines() == ["# n=5 d=3 q=2 size=4 mindist=3", "00000", "00111", "11001", "11110"]
    assert "size=4 mindist=3" in captured.err


def test_construct_hl_to_file(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """Test the randomized construction written to a file."""
    path = tmp_path / "code.txt"

    assert run(["construct", "--n", "6", "--d", "3", "--method", "hl", "--trials", "4", "--out", str(path)]) == EXIT_OK

    assert path.read_text(encoding="utf-8").startswith("# n=6 d=3 q=2 size=")
    assert "size=" in capsys.readouterr().out


def test_color(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """Test the coloring summary and its CSV output."""
    assert run(["color", "--n", "3", "--d", "3"]) == EXIT_OK
    assert capsys.readouterr().out == "n_colors=8 ndg_bound=8 volume=8 proper=true\n"

    path = tmp_path / "colors.csv"
    assert run(["color", "--n", "3", "--d", "1", "--out", str(path)]) == EXIT_OK
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "word,color"
    assert lines[1] == "000,0"
    assert len(lines) == 9


def test_verify(codebook_5_3_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """Test verification against the header distance and a stricter one."""
    assert run(["verify", "--codebook", str(codebook_5_3_file)]) == EXIT_OK
    assert capsys.readouterr().out == "size=4 mindist=3 required=3 PASS\n"

    assert run(["verify", "--codebook", str(codebook_5_3_file), "--d", "4"]) == EXIT_INVALID
    assert "FAIL" in capsys.readouterr().out


def test_verify_reports_header_distance_not_met(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """Test that a book below its header distance is reported as a failure."""
    path = tmp_path / "short.txt"
    path.write_text("# n=3 d=3 q=2\n000\n011\n", encoding="utf-8")

    assert run(["verify", "--codebook", str(path)]) == EXIT_INVALID
    assert capsys.readouterr().out == "size=2 mindist=2 required=3 FAIL\n"
