import json

import pytest

from ellbp.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_coeffs_csv_golden(capsys):
    code, out = run_cli(capsys, "coeffs", "--family", "hermite", "--n-max", "3", "--format", "csv")
    assert code == 0
    assert out == "n,b_n,d_n\n1,-9/8,-1\n2,-25/24,-1\n3,-49/48,-1\n"


def test_coeffs_json_families(capsys):
    code, out = run_cli(capsys, "coeffs", "--family", "stieltjes-carlitz:4", "--n-max", "2")
    assert code == 0
    data = json.loads(out)
    assert data["b"]["1"] == "-9/8"
    assert data["d"]["0"] == "-2"
    code, out = run_cli(capsys, "coeffs", "--family", "associated:1", "--n-max", "1")
    assert json.loads(out)["b"]["1"] == "-25/24"


def test_moments_json_golden(capsys):
    code, out = run_cli(capsys, "moments", "--n-max", "3")
    assert code == 0
    assert json.loads(out) == {
        "c": {"-2": "1/16", "-1": "1/8", "0": "1", "1": "-1", "2": "-1/8", "3": "-1/16"}
    }


def test_moments_csv(capsys):
    code, out = run_cli(capsys, "moments", "--n-max", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "s,c_s"
    assert "-1,1/8" in out.splitlines()


def test_cfrac_exact(capsys):
    code, out = run_cli(capsys, "cfrac", "--n", "2", "--z", "1/2")
    assert code == 0
    data = json.loads(out)
    # B_2/A_2 at z = 1/2: 4z(1+z)/(8z^2+7z+8) = 3/(27/2)... = 2/9... compute: 3/13.5
    assert data["convergent"] == "2/9"


def test_cfrac_float(capsys):
    code, out = run_cli(capsys, "cfrac", "--n", "30", "--z", "0.5")
    assert code == 0
    data = json.loads(out)
    assert float(data["abs_err"]) < 3e-10


def test_szego_json(capsys):
    code, out = run_cli(capsys, "szego", "--n-max", "2")
    assert code == 0
    data = json.loads(out)
    assert data["a"] == ["-7/16", "-19/69"]
    assert data["u"] == ["9/8", "25/24"]


def test_weights_csv(capsys):
    code, out = run_cli(capsys, "weights", "--kind", "interval-w", "--grid-points", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "x,value"
    assert len(lines) == 5
    # even weight: first and last rows mirror
    assert lines[1].split(",")[1] == lines[4].split(",")[1]


def test_weights_rho_has_three_columns(capsys):
    code, out = run_cli(capsys, "weights", "--kind", "circle-rho", "--grid-points", "3")
    assert code == 0
    assert out.splitlines()[0] == "theta,re,im"


def test_determinism(capsys):
    _, first = run_cli(capsys, "weights", "--kind", "circle-rho-tilde", "--grid-points", "64")
    _, second = run_cli(capsys, "weights", "--kind", "circle-rho-tilde", "--grid-points", "64")
    assert first == second
    _, m1 = run_cli(capsys, "moments", "--n-max", "8")
    _, m2 = run_cli(capsys, "moments", "--n-max", "8")
    assert m1 == m2


def test_verify_single_suite(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "exactnum")
    assert code == 0
    assert "PASS  overall" in out
    code, out = run_cli(capsys, "verify", "--suite", "exactnum", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["pass"] is True
    assert all(item["pass"] for item in data["suites"])


def test_verify_unknown_suite_usage_error(capsys):
    code = main(["verify", "--suite", "nonsense"])
    assert code == 2


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["coeffs", "--family", "unobtainium"])
    assert exc.value.code == 2


def test_moments_rejects_sc_family(capsys):
    code = main(["moments", "--family", "stieltjes-carlitz:4"])
    assert code == 2


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out = run_cli(capsys, "moments", "--n-max", "2", "--output", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["c"]["1"] == "-1"
