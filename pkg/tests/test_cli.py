import csv
import io
import json
import subprocess
import sys

import pytest

from fgamma.cli import main, parse_grid, UsageError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_gamma_closed(capsys):
    code, out, _ = run(capsys, "eval", "gamma", "--monomial", "2", "--s", "2")
    assert code == 0
    obj = json.loads(out)
    assert obj["value"] == {"re": 2.0, "im": 0.0}
    assert obj["method"] == "closed_form" and obj["warnings"] == []
    assert set(obj) == {"value", "abs_error_estimate", "method", "warnings"}


@pytest.mark.parametrize("method,tag", [("quad", "quadrature"), ("continued", "continuation"),
                                        ("limit:100000", "limit"), ("product:100000", "product"),
                                        ("asymptotic", "asymptotic")])
def test_eval_gamma_methods(capsys, method, tag):
    code, out, _ = run(capsys, "eval", "gamma", "--monomial", "2", "--s", "3", "--method", method)
    obj = json.loads(out)
    assert code == 0 and obj["method"] == tag
    assert obj["value"]["re"] == pytest.approx(24, rel=5e-2)


def test_eval_gamma_complex_and_coeffs(capsys):
    code, out, _ = run(capsys, "eval", "gamma", "--coeffs", "1,0,1", "--s", "3")
    assert code == 0 and json.loads(out)["value"]["re"] == pytest.approx(29, rel=1e-12)
    code, out, _ = run(capsys, "eval", "gamma", "--monomial", "1", "--s", "1,1")
    assert json.loads(out)["value"]["im"] != 0


def test_eval_kgamma_zeta_beta(capsys):
    _, out, _ = run(capsys, "eval", "kgamma", "--k", "0.5", "--s", "2")
    assert json.loads(out)["value"]["re"] == pytest.approx(0.75, rel=1e-10)
    _, out, _ = run(capsys, "eval", "zeta", "--monomial", "2", "--s", "2")
    assert json.loads(out)["value"]["re"] == pytest.approx(1.2020569032, abs=1e-9)
    _, out, _ = run(capsys, "eval", "zeta", "--coeffs", "0,0,1", "--s", "2", "--terms", "200")
    assert json.loads(out)["method"] == "series"
    _, out, _ = run(capsys, "eval", "beta", "--monomial", "2", "--p", "1", "--q", "1")
    assert json.loads(out)["value"]["re"] == pytest.approx(0.5)


def test_divergent_zeta_prints_null(capsys):
    code, out, _ = run(capsys, "eval", "zeta", "--coeffs", "1,0,1", "--s", "2", "--terms", "5")
    obj = json.loads(out)
    assert code == 0 and obj["abs_error_estimate"] is None and obj["warnings"]


def test_bsato_output(capsys):
    code, out, _ = run(capsys, "bsato", "--monomial", "2")
    assert code == 0
    assert out.splitlines() == ["coefficients: 0,-2,4", "roots: 0,0.5",
                                "operator: d^2/dt^2", "degenerate: false"]
    _, out, _ = run(capsys, "bsato", "--quadratic", "0,1")
    assert "coefficients: 0,4,-4" in out and "roots: 0,1" in out
    _, out, _ = run(capsys, "bsato", "--quadratic", "2,1")
    assert "degenerate: true" in out


def test_verify_functional_eq(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "functional_eq",
                       "--grid", "s=1.2:3.0:0.2;k=1,2,3")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 30
    assert all(r["status"] == "pass" for r in rows)


def test_verify_json_and_quadratic(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "quadratic_printed",
                       "--grid", "s=1:2:1;bc=0:1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and [d["abs_residual"] for d in data] == pytest.approx([1, 1 / 3], abs=1e-9)


def test_verify_tol_override(capsys):
    _, out, _ = run(capsys, "verify", "--identity", "quarter_reflection",
                    "--grid", "s=0.1:0.1:0.1;k=2", "--tol", "0.9")
    assert out.splitlines()[1].endswith(",pass")


def test_verify_beta_grid(capsys):
    _, out, _ = run(capsys, "verify", "--identity", "beta_relation", "--grid", "s=1:2:0.5;k=2")
    assert len(out.splitlines()) == 1 + 9


def test_byte_identical(capsys):
    argv = ["verify", "--identity", "kgamma_bridge", "--grid", "s=1:2:0.5;k=1,2,3"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b


@pytest.mark.parametrize("argv", [
    [],
    ["eval"],
    ["eval", "gamma", "--s", "2"],
    ["eval", "gamma", "--monomial", "2", "--s", "x"],
    ["eval", "gamma", "--monomial", "2", "--s", "1,2,3"],
    ["eval", "gamma", "--monomial", "0", "--s", "2"],
    ["eval", "gamma", "--monomial", "2", "--s", "2", "--method", "simpson"],
    ["eval", "gamma", "--coeffs", "1, 2", "--s", "2"],
    ["eval", "gamma", "--coeffs", "1,0,1", "--s", "2", "--method", "closed"],
    ["eval", "zeta", "--coeffs", "1,0,1", "--s", "2"],
    ["verify", "--identity", "nope", "--grid", "s=1:2:1"],
    ["verify", "--identity", "reflection", "--grid", "k=1"],
    ["verify", "--identity", "reflection", "--grid", "s=1:2:0"],
    ["bsato", "--quadratic", "1"],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == "" and "usage" in err


@pytest.mark.parametrize("argv", [
    ["eval", "gamma", "--monomial", "2", "--s", "0.5"],
    ["eval", "gamma", "--monomial", "2", "--s", "0.5", "--method", "continued"],
    ["eval", "gamma", "--coeffs", "1,-3,1", "--s", "2"],
    ["eval", "gamma", "--monomial", "1", "--s", "300"],
    ["eval", "zeta", "--monomial", "2", "--s", "0.5"],
    ["eval", "kgamma", "--k", "2", "--s", "-1"],
    ["bsato", "--quadratic=-3,1"],
])
def test_domain_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and "error" in err


def test_convergence_error_exit(capsys, monkeypatch):
    from fgamma.errors import ConvergenceError
    import fgamma.cli as cli

    def boom(*a, **k):
        raise ConvergenceError("no")
    monkeypatch.setattr(cli, "gamma_f_quadrature", boom)
    code, _, err = run(capsys, "eval", "gamma", "--coeffs", "1,0,1", "--s", "2")
    assert code == 3 and "no" in err


def test_parse_grid():
    g = parse_grid("s=1.2:3.0:0.2;k=1,2;bc=0:1,1:3")
    assert g["s"][0] == 1.2 and g["s"][-1] == 3.0 and len(g["s"]) == 10
    assert g["k"] == [1, 2] and g["bc"] == [(0.0, 1.0), (1.0, 3.0)]
    with pytest.raises(UsageError):
        parse_grid("s=1:2:1;s=1:2:1")


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "fgamma", "bsato", "--monomial", "3"],
                         capture_output=True, text=True, check=True).stdout
    assert out.startswith("coefficients: 0,6,-27,27")
