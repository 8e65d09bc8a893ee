import json
import subprocess
import sys

import pytest

from flatlim import serialize
from flatlim.cli import main, worked_example


def run(*args, env=None):
    return subprocess.run(
        [sys.executable, "-m", "flatlim", *args], capture_output=True, text=True, env=env
    )


@pytest.mark.parametrize(
    "args,code,verdict",
    [
        (["--d", "3", "--points", "0,1,3"], 0, "verdict: ExtremalLimit"),
        (["--d", "4", "--points", "0,1,2,3"], 2, "verdict: EmbeddedPoints(1)"),
        (["--d", "4", "--points", "0,1,2,3", "--field", "p=3"], 3, "verdict: Rejected"),
    ],
)
def test_certify_exit_codes(args, code, verdict):
    result = run("certify", *args)
    assert result.returncode == code, result.stderr
    assert verdict in result.stdout


def test_characteristic_warning():
    result = run("certify", "--d", "4", "--points", "0,1,2,3", "--field", "p=3")
    assert "characteristic 3" in result.stderr
    assert run("certify", "--d", "3", "--points", "0,1,3", "--field", "p=101").stderr == ""


@pytest.mark.parametrize(
    "args",
    [
        ["certify", "--d", "3"],
        ["certify", "--d", "3", "--points", "0,1,3", "--random"],
        ["certify", "--d", "3", "--points", "0,1"],
        ["certify", "--d", "1", "--points", "0"],
        ["certify", "--d", "3", "--points", "0,1,3", "--field", "p=4"],
        ["certify", "--d", "three", "--points", "0,1,3"],
        ["certify", "--d", "3", "--random", "--seed", "a-b"],
        ["certify", "--d", "3", "--points", "0,x,3"],
        ["frobnicate"],
        [],
    ],
)
def test_malformed_flags_exit_64(args, capsys):
    with pytest.raises(SystemExit) as info:
        sys.exit(main(args))
    assert info.value.code == 64
    assert "usage" in capsys.readouterr().err


def test_json_roundtrip(capsys):
    assert main(["certify", "--d", "4", "--points", "0,1,2,3", "--json"]) == 2
    out = capsys.readouterr().out
    report = serialize.report_from_dict(json.loads(out))
    assert str(report.verdict) == "EmbeddedPoints(1)"
    assert serialize.dumps(report) + "\n" == out


def test_batch_is_deterministic_and_parallel_safe():
    args = ["certify", "--d", "4", "--random", "--seed", "1-3,7", "--bound", "12"]
    serial = run(*args)
    parallel = run(*args, "--jobs", "3")
    assert serial.returncode == parallel.returncode == 0
    assert serial.stdout == parallel.stdout
    assert serial.stdout.count("verdict: ExtremalLimit") == 4
    assert [l for l in serial.stdout.splitlines() if l.startswith("certify")][-1].endswith("seed=7 bound=12")


def test_batch_json_is_a_list(capsys):
    assert main(["certify", "--d", "3", "--random", "--seed", "1,2", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert [r["instance"]["seed"] for r in data] == [1, 2]


def test_example_matches_golden(data_dir):
    golden = json.loads((data_dir / "example_d4.json").read_text(encoding="utf-8"))
    assert worked_example() == golden
    assert all(golden["checks"].values())
    result = run("example", "--golden", str(data_dir / "example_d4.json"))
    assert result.returncode == 0, result.stderr
    assert "embedded point 3*z + w = 0 on L, length 1" in result.stdout


def test_catalan(capsys):
    assert main(["catalan", "--max-d", "7"]) == 0
    rows = capsys.readouterr().out.splitlines()[1:]
    assert [int(r.split("\t")[1]) for r in rows] == [1, 1, 2, 5, 14, 42]


def test_gb(tmp_path, capsys):
    f1 = tmp_path / "f1.txt"
    f1.write_text("x^2, x*y\n", encoding="utf-8")
    assert main(["gb", "--order", "grevlex", str(f1)]) == 0
    assert sorted(capsys.readouterr().out.split()) == ["x*y", "x^2"]


def test_gb_parse_error_has_position(tmp_path, capsys):
    f1 = tmp_path / "bad.txt"
    f1.write_text("x^2 + u\n", encoding="utf-8")
    assert main(["gb", str(f1)]) == 64
    assert "position 6" in capsys.readouterr().err


def test_hilbert(capsys):
    assert main(["hilbert", "--ideal", "x,y"]) == 0
    assert "HP = n + 1" in capsys.readouterr().out


def test_log_env_var():
    import os

    env = dict(os.environ, FLATLIM_LOG="info")
    result = run("certify", "--d", "3", "--points", "0,1,3", env=env)
    assert result.returncode == 0
    assert "INFO" in result.stderr


def test_example_alias(data_dir):
    result = run("paper-example", "--json", "--golden", str(data_dir / "example_d4.json"))
    assert result.returncode == 0, result.stderr
