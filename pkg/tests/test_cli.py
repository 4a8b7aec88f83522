import json
import subprocess
import sys

import pytest

from zdsky.cli import main, parse_range, UsageError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_range():
    assert parse_range("9..12") == [9, 10, 11, 12]
    assert parse_range("3,5") == [3, 5]
    assert parse_range("7") == [7]
    with pytest.raises(UsageError):
        parse_range("5..2")
    with pytest.raises(UsageError):
        parse_range("x")


def test_mult(capsys):
    assert run(capsys, "mult", "--n", "3", "1", "4")[:2] == (0, "+5\n")
    assert run(capsys, "mult", "--n", "3", "4", "1")[1] == "-5\n"
    assert run(capsys, "mult", "--n", "3", "1", "9")[0] == 2


def test_trips(capsys):
    code, out, _ = run(capsys, "trips", "--n", "5")
    assert code == 0 and "155 trips" in out
    code, out, _ = run(capsys, "trips", "--n", "3", "--list", "--format", "json")
    assert json.loads(out)["trips"][0] == [1, 2, 3]


def test_boxkites(capsys):
    code, out, _ = run(capsys, "boxkites", "--n", "5", "--s", "9", "--viable")
    assert code == 0 and len(out.splitlines()) == 3
    code, out, _ = run(capsys, "boxkites", "--n", "4", "--s", "1..7", "--format", "json")
    assert len(json.loads(out)) == 7


def test_et_json_counts_23(capsys):
    code, out, _ = run(capsys, "et", "--n", "6", "--s", "25", "--method", "brute", "--format", "json")
    assert code == 0 and json.loads(out)["boxkite_count"] == 23


def test_et_writes_files_atomically(tmp_path, capsys):
    target = tmp_path / "t.csv"
    assert run(capsys, "et", "--n", "4", "--s", "1", "--out", str(target))[0] == 0
    assert target.read_text().startswith(",2,4,6,7,5,3\n")
    img = tmp_path / "t.ppm"
    assert run(capsys, "et", "--n", "5", "--s", "15", "--format", "ppm", "--out", str(img),
               "--labels", "--overlay")[0] == 0
    assert img.read_bytes().startswith(b"P6\n")
    assert sorted(p.name for p in tmp_path.iterdir()) == ["t.csv", "t.ppm"]


@pytest.mark.parametrize("argv", [
    ["et", "--n", "5", "--s", "8", "--method", "recipe"],
    ["et", "--n", "5", "--s", "16"],
    ["et", "--n", "5", "--s", "9..10"],
    ["et", "--n", "5"],
    ["et", "--n", "5", "--s", "9", "--format", "gif"],
    ["frobnicate"],
    ["flipbook", "--n", "5", "--s", "9..10"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_max_n_guard(capsys, monkeypatch):
    assert run(capsys, "trips", "--n", "9")[0] == 2
    monkeypatch.setenv("ZDSKY_MAX_N", "9")
    assert run(capsys, "trips", "--n", "9")[0] == 0
    monkeypatch.setenv("ZDSKY_MAX_N", "4")
    code, _, err = run(capsys, "et", "--n", "5", "--s", "3")
    assert code == 2 and "ZDSKY_MAX_N" in err


def test_counts(capsys):
    code, out, _ = run(capsys, "counts", "--n", "6", "--s", "17,25", "--format", "json")
    rows = json.loads(out)
    assert [r["boxkite_count"] for r in rows] == [7, 23]
    assert rows[1]["P_arr"] == [4, 3]


@pytest.mark.parametrize("argv", [
    ["verify", "equivalence", "--n", "5", "--s", "9..15"],
    ["verify", "viziers", "--n", "4"],
    ["verify", "recursion", "--n", "5", "--s", "9,15"],
    ["verify", "fourcorners", "--n", "5", "--s", "11"],
    ["verify", "frenchwindows", "--n", "5", "--s", "13"],
    ["verify", "numberhub", "--n", "5"],
    ["verify", "hidefill", "--n", "6", "--seed", "7"],
])
def test_verify_suites_pass(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0, out
    assert "PASS" in out and "FAIL" not in out


def test_verify_json_report(capsys):
    code, out, err = run(capsys, "verify", "numberhub", "--n", "5", "--format", "json")
    assert code == 0 and json.loads(out)["ok"] is True
    assert "PASS" in err


def test_verify_failure_exits_1(capsys):
    # the hide/fill pattern breaks when the first added bit is not the next octave
    code, out, _ = run(capsys, "verify", "hidefill", "--n", "6", "--bits", "16", "--samples", "5")
    assert code == 1 and "FAIL" in out


def test_verify_with_nothing_to_check(capsys):
    assert run(capsys, "verify", "recursion", "--n", "5", "--s", "16")[0] == 2


def test_flipbook_and_balloon(tmp_path, capsys):
    code, out, _ = run(capsys, "flipbook", "--n", "5", "--s", "9..15", "--out", str(tmp_path / "fb"))
    assert code == 0 and len(out.splitlines()) == 7
    code, out, _ = run(capsys, "balloon", "--s", "15", "--n", "5..7", "--out", str(tmp_path / "b"),
                       "--format", "svg")
    assert code == 0 and len(out.splitlines()) == 3


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "zdsky", "mult", "--n", "3", "1", "4"],
                         capture_output=True, text=True, check=True)
    assert res.stdout == "+5\n"
