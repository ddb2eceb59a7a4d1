import json
import pathlib
import subprocess
import sys

import pytest

from cyclograd import suites
from cyclograd.cli import main

GOLDEN = pathlib.Path(__file__).parent / "golden"


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_moment(capsys):
    assert run(["moment", "x1.x2.x1.x2"], capsys)[:2] == (0, "0\n")
    assert run(["moment", "x1.x1.x1.x1"], capsys)[:2] == (0, "2\n")


def test_grad_and_bracket(capsys):
    code, out, _ = run(["grad", "x1.x2"], capsys)
    assert code == 0 and out.splitlines() == ["delta_1 = x2", "delta_2 = x1"]
    code, out, _ = run(["bracket", "x1.x2; 0", "0; x1", "--json"], capsys)
    assert code == 0 and json.loads(out) == {"bracket": ["-x1.x1", "x1.x2"]}


def test_theta_and_csym(capsys):
    code, out, _ = run(["theta", "x2; 0"], capsys)
    assert code == 0 and "cyclic gradient: no" in out
    assert run(["csym", "x1.x2"], capsys)[1] == "x1.x2 + x2.x1\n"


def test_seminorm_and_bounds(capsys):
    assert run(["seminorm", "3*x1 - x2.x1", "--R", "5"], capsys)[1].strip().endswith("= 40")
    code, out, _ = run(["bound", "thm27", "x2; x1.x1", "x1.x2", "--m", "3", "--json"], capsys)
    assert code == 0 and json.loads(out)["pass"] is True
    code, out, _ = run(["bound", "prop64", "x2; -x1", "x1.x1; 0"], capsys)
    assert code == 0 and "ok" in out


def test_basis_forms(capsys):
    code, out, _ = run(["basis", "--grade", "2", "--form", "lex", "--json"], capsys)
    assert code == 0 and len(json.loads(out)["basis"]) == 4
    code, out, _ = run(["basis", "--grade", "3", "--form", "roots", "--json"], capsys)
    assert len(json.loads(out)["basis"]) == 10
    code, out, _ = run(["basis", "--grade", "1", "--form", "real", "--json"], capsys)
    assert len(json.loads(out)["basis"]) == 1
    code, out, _ = run(["basis", "--grade", "0", "--trace", "semicircular", "--json"], capsys)
    assert len(json.loads(out)["basis"]) == 1


def test_glcheck(capsys):
    code, out, _ = run(["glcheck", "--n", "2"], capsys)
    assert code == 0 and "center of V_0: (x1; x2)" in out


def test_errors_exit_nonzero(capsys):
    code, _, err = run(["moment", "x0"], capsys)
    assert code == 2 and "start at 1" in err
    assert run(["grad", "x3", "--n", "2"], capsys)[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["bound", "thm27", "x1", "x1", "--R", "2", "--Rp", "1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["verify", "nosuch"])


def test_verify_smallest_configuration(capsys):
    code, out, _ = run(["verify", "all", "--n", "1", "--degree", "3"], capsys)
    assert code == 0 and out.strip().endswith("checks passed")


def test_failing_check_gives_nonzero_exit(monkeypatch, capsys):
    def broken(cfg):
        return [suites.Check("always fails", "test", _fail, {})]
    monkeypatch.setitem(suites._BUILDERS, "thm27", broken)
    code, out, _ = run(["verify", "thm27"], capsys)
    assert code == 1 and "[FAIL] always fails" in out


def _fail():
    return False, {"why": "deliberate"}


def test_crashing_check_is_a_failure():
    r = suites.run_check(suites.Check("boom", "test", _crash, {}))
    assert r["pass"] is False and "RuntimeError" in r["detail"]["error"]


def _crash():
    raise RuntimeError("boom")


def test_report_schema_matches_golden(capsys):
    code, out, _ = run(["verify", "thm27", "--m", "3", "--R", "1", "--Rp", "2", "--seed", "7", "--json"], capsys)
    assert code == 0
    report = json.loads(out)
    assert set(report) == {"suite", "checks"}
    for c in report["checks"]:
        assert set(c) == {"name", "anchor", "params", "pass", "detail"}
    assert report == json.loads((GOLDEN / "verify_thm27_seed7.json").read_text())


def test_parallel_report_identical():
    cfg = suites.Config(samples=20, seed=3)
    serial = suites.run_suite("lie", cfg, jobs=1)
    parallel = suites.run_suite("lie", cfg, jobs=3)
    assert serial == parallel


def test_seed_changes_instances():
    a = suites.run_suite("thm27", suites.Config(seed=1, samples=10))
    b = suites.run_suite("thm27", suites.Config(seed=2, samples=10))
    assert a["checks"][1]["detail"] != b["checks"][1]["detail"]


def test_degree_cap_env(monkeypatch):
    monkeypatch.setenv("CYCLOGRAD_MAX_DEGREE", "2")
    checks = suites.build("exactness", suites.Config())
    assert checks[0].params["degree"] == 2


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "cyclograd.cli", "moment", "x1.x1"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip() == "1"
