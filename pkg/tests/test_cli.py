import json
import subprocess
import sys
from pathlib import Path

import pytest

from painleve_tr.cli import EXIT_CONFIG, EXIT_FAIL, EXIT_PASS, main
from painleve_tr.curves import build_bessel, dump_curve

GOLDEN = Path(__file__).parent / "golden" / "cli"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_fg_bessel(capsys):
    code, out, _ = run(capsys, "fg", "--curve", "bessel", "--g", "2", "--theta", "1")
    assert code == EXIT_PASS
    assert out == "-1/240\n"


def test_fg_weber(capsys):
    assert run(capsys, "fg", "--curve", "weber", "--g", "3", "--theta", "1")[1] == "-1/1008\n"


def test_sigma_negative_q0(capsys):
    code, out, _ = run(capsys, "sigma", "--k", "1", "--theta", "1", "--q0", "-1/4")
    assert code == EXIT_PASS and out == "8/225\n"


def test_fg_jm_symbolic_golden(capsys):
    out = run(capsys, "fg", "--curve", "jm", "--g", "2", "--theta", "1", "--symbolic")[1]
    assert out == (GOLDEN / "fg_jm_g2_theta1.txt").read_text()


def test_table_res1_golden(capsys):
    code, out, _ = run(capsys, "table", "res1")
    assert code == EXIT_PASS
    assert out == (GOLDEN / "table_res1.txt").read_text()


def test_json_round_trip(capsys, tmp_path):
    target = tmp_path / "r.json"
    code = main(["verify", "bernoulli", "--gmax", "4", "--theta", "1", "--format", "json", "--out", str(target)])
    assert code == EXIT_PASS
    text = target.read_text()
    data = json.loads(text)
    assert json.dumps(data, indent=2) + "\n" == text
    assert {r["status"] for r in data} == {"pass"}
    assert set(data[0]) == {"check", "status", "anchor", "lhs", "rhs", "first_diff", "millis"}


def test_verify_tt_jm(capsys):
    code, out, _ = run(capsys, "verify", "tt", "--lax", "jm", "--K", "4", "--theta", "1", "--q0", "-1/4")
    assert code == EXIT_PASS, out
    assert "FAIL" not in out


@pytest.mark.parametrize("name", ["sigm", "taunum-deriv", "fghtw", "fgbessel"])
def test_tables(capsys, name):
    code, out, _ = run(capsys, "table", name)
    assert code == EXIT_PASS, out


def test_failing_check_exits_one(capsys):
    # the JM - HTW difference carries the opposite sign to the Bernoulli constant
    code, out, _ = run(capsys, "verify", "difference", "--g", "2", "--theta", "3", "--format", "json")
    assert code == EXIT_FAIL
    report = json.loads(out)[0]
    assert report["status"] == "fail" and report["first_diff"] == "1/1080"


@pytest.mark.parametrize(
    "argv",
    [
        ["fg", "--curve", "jm", "--g", "2"],
        ["fg", "--curve", "jm", "--g", "2", "--theta", "0"],
        ["fg", "--curve", "weber", "--g", "2", "--theta", "2"],
        ["fg", "--curve", "bessel", "--g", "2", "--q0", "1"],
        ["fg", "--curve", "jm", "--g", "2", "--theta", "1", "--q0", "1"],
        ["verify", "loop", "--theta", "1"],
        ["mk", "--curve", "bessel", "--k", "1", "--theta", "1"],
    ],
)
def test_config_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_CONFIG
    assert "error" in err


def test_bad_choice_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["fg", "--curve", "nope"])
    assert exc.value.code == EXIT_CONFIG


def test_curve_file(capsys, tmp_path):
    path = tmp_path / "bessel.json"
    dump_curve(build_bessel(1), path)
    assert run(capsys, "fg", "--curve-file", str(path), "--g", "2")[1] == "-1/240\n"


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "painleve_tr", "fg", "--curve", "bessel", "--g", "3", "--theta", "1"],
        capture_output=True, text=True, check=True,
    )
    assert out.stdout == "1/1008\n"
