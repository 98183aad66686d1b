import json
import subprocess
import sys

from hermsf.cli import main


def run_cli(args):
    proc = subprocess.run(
        [sys.executable, "-m", "hermsf.cli"] + args, capture_output=True, text=True
    )
    return proc.returncode, proc.stdout, proc.stderr


def test_gamma_command():
    rc, out, _ = run_cli(["gamma", "--n", "2", "--sigma", "t", "--e0", "1"])
    assert rc == 0
    obj = json.loads(out)
    assert obj["sigma"] == {"perm": [1, 2], "signs": [1, -1]}
    assert obj["gamma"]["nvars"] == 2
    assert obj["gamma"]["num"] == [
        {"exps": [0, -2], "coeff": {"num_u": [1], "den_u": [1]}}
    ]


def test_gamma_latex_template():
    rc, out, _ = run_cli(["gamma", "--n", "2", "--sigma", "s1", "--format", "latex"])
    assert rc == 0
    assert out.strip() == "\\frac{1 - q^{z_1-z_2-1}}{q^{z_1-z_2} - q^{-1}}"


def test_spherical_schema_and_validation():
    rc, out, _ = run_cli(["spherical", "--n", "2", "--lambda", "1,0", "--e0", "0"])
    assert rc == 0
    obj = json.loads(out)
    assert obj["nvars"] == 2
    assert obj["omega"]["nvars"] == 2 and obj["f_times_omega"]["nvars"] == 2
    rc, _, err = run_cli(["spherical", "--n", "2", "--lambda", "0,1"])
    assert rc == 2
    assert "weakly decreasing" in err
    rc, _, _ = run_cli(["spherical", "--n", "2", "--lambda", "1,0", "--e0", "1"])
    assert rc == 2  # lambda_n < e0


def test_unknown_flags_rejected():
    rc, _, _ = run_cli(["spherical", "--n", "2", "--lambda", "1,0", "--bogus"])
    assert rc == 2


def test_siegel_commands():
    rc, out, _ = run_cli(["siegel", "b1", "--lambda", "1"])
    assert rc == 0
    obj = json.loads(out)
    assert obj["nvars"] == 1 and obj["den"] == []
    rc, _, _ = run_cli(["siegel", "fe", "--n", "1", "--lambda", "3", "--e0", "1"])
    assert rc == 0
    rc, _, _ = run_cli(["siegel", "fe", "--n", "2", "--lambda", "2,1"])
    assert rc == 0
    rc, out, _ = run_cli(["siegel", "chain", "--n", "4", "--e0", "1"])
    assert rc == 0
    assert all(json.loads(out)["checks"].values())


def test_oracle_commands():
    rc, out, err = run_cli(
        ["oracle", "omega1", "--p", "3", "--N", "3", "--lambda", "1", "--e", "0",
         "--check"]
    )
    assert rc == 0
    assert json.loads(out)["nvars"] == 1
    assert "match: True" in err
    rc, _, err = run_cli(["oracle", "siegel1", "--p", "3", "--lambda", "1", "--check"])
    assert rc == 0
    rc, _, err = run_cli(
        ["oracle", "omega1", "--p", "3", "--N", "1", "--lambda", "2", "--e", "0"]
    )
    assert rc == 2  # precision guard
    rc, _, _ = run_cli(["oracle", "omega1", "--p", "4", "--N", "2", "--lambda", "0"])
    assert rc == 2  # p must be an odd prime


def test_budget_exit_code(monkeypatch):
    monkeypatch.setenv("HS_BUDGET", "100")
    rc = main(["oracle", "omega1", "--p", "3", "--N", "2", "--lambda", "0", "--e", "0"])
    assert rc == 3


def test_determinism():
    args = ["spherical", "--n", "2", "--lambda", "2,1", "--e0", "1"]
    _, out1, _ = run_cli(args)
    _, out2, _ = run_cli(args)
    assert out1 == out2
    args = ["gamma", "--n", "3", "--sigma", "s1 s2 t"]
    _, out1, _ = run_cli(args)
    _, out2, _ = run_cli(args)
    assert out1 == out2


def test_verify_subcommand_fast_suites():
    rc, out, err = run_cli(["verify", "rho-closed"])
    assert rc == 0
    payload = json.loads(out)
    assert payload[0]["suite"] == "rho-closed" and payload[0]["passed"]
    assert "PASS" in err
    rc, out, _ = run_cli(["verify", "zeta-rank1"])
    assert rc == 0


def test_verify_cocycle_small_n():
    rc, out, _ = run_cli(["verify", "cocycle", "--n", "3"])
    assert rc == 0
    assert json.loads(out)[0]["passed"]
