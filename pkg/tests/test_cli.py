import csv
import io
import json
import math
import pathlib
import subprocess
import sys

import jsonschema
import pytest

from hypconfluence import cli

SCHEMAS = pathlib.Path(__file__).resolve().parents[1] / "docs" / "schemas"


def _schema(name):
    return json.loads((SCHEMAS / name).read_text())


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def _rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_help_exits_zero():
    r = subprocess.run([sys.executable, "-m", "hypconfluence", "--help"], capture_output=True, text=True)
    assert r.returncode == 0
    assert "stokes" in r.stdout and "verify" in r.stdout and "plotdata" in r.stdout


def test_stokes_constant_case(capsys):
    code, out, _ = run(capsys, "stokes", "--a", "0.5", "--b", "0.5",
                       "--eps-grid", "0.01@0,0.02@1,0.05@-1")
    assert code == 0
    rows = _rows(out)
    assert len(rows) == 3
    for r in rows:
        assert abs(complex(float(r["lambda_re"]), float(r["lambda_im"])) + 2j) < 1e-12
        assert abs(complex(float(r["mu_re"]), float(r["mu_im"])) + 2j) < 1e-12
        assert abs(complex(float(r["L_re"]), float(r["L_im"])) + 4) < 1e-12


def test_stokes_row_count_and_number_format(capsys):
    code, out, _ = run(capsys, "stokes", "--a", "0.3+0.1j", "--b", "0.6",
                       "--eps-grid", "logspace:-2:-4:100@0.3")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 101
    header = lines[0].split(",")
    assert header[:3] == ["eps_modulus", "eps_argument", "sector"]
    for line in lines[1:]:
        fields = line.split(",")
        assert len(fields) == len(header)
        for name, v in zip(header, fields):
            if name != "sector":
                float(v)
                assert "E" not in v and ";" not in v


def test_stokes_rows_follow_grid_order(capsys):
    code, out, _ = run(capsys, "stokes", "--a", "0.3", "--b", "0.6", "--eps", "0.02@0.5",
                       "--eps", "0.01@0.5", "--eps", "0.03@2.5")
    rows = _rows(out)
    assert [float(r["eps_modulus"]) for r in rows] == [0.02, 0.01, 0.03]
    assert [r["sector"] for r in rows] == ["+", "+", "-"]


def test_eps_dependent_parameters(capsys):
    # a(eps) = 0.5 + eps, b(eps) = 0.5 - eps keeps a + b = 1: lambda = mu
    code, out, _ = run(capsys, "stokes", "--a", "[0.5, 1]", "--b", "[0.5, -1]",
                       "--eps", "0.02@0.4", "--format", "json")
    assert code == 0
    row = json.loads(out)["rows"][0]
    lam = complex(row["lambda"]["re"], row["lambda"]["im"])
    mu = complex(row["mu"]["re"], row["mu"]["im"])
    assert abs(lam - mu) < 1e-12 * abs(lam)


def test_json_tables_validate(capsys):
    schema = _schema("table.schema.json")
    code, out, _ = run(capsys, "stokes", "--a", "0.3", "--b", "0.6", "--eps", "0.01@0.2", "--format", "json")
    assert code == 0
    jsonschema.validate(json.loads(out), schema)
    code, out, _ = run(capsys, "plotdata", "h_limit_scan", "--a", "0.3", "--b", "0.7",
                       "--eps-grid", "0.01@0", "--format", "json")
    assert code == 0
    jsonschema.validate(json.loads(out), schema)


def test_config_errors(capsys):
    assert run(capsys, "stokes", "--a", "0.3", "--b", "0.6", "--eps", "0.01@3.1", "--sector", "+")[0] == 1
    assert run(capsys, "stokes", "--a", "oops", "--b", "0.6", "--eps", "0.01@0")[0] == 1
    assert run(capsys, "stokes", "--a", "0.3", "--eps", "0.01@0")[0] == 1
    assert run(capsys, "stokes", "--a", "0.3", "--b", "0.6", "--eps", "0")[0] == 1
    assert run(capsys, "verify", "borel", "--format", "csv")[0] == 1
    with pytest.raises(SystemExit) as exc:
        cli.main(["stokes", "--sector", "x"])
    assert exc.value.code == 1


def test_empty_grid(capsys):
    code, out, _ = run(capsys, "stokes", "--a", "0.3", "--b", "0.6", "--eps-grid", "")
    assert code == 0
    assert out.strip().splitlines() == [out.strip()]
    assert out.startswith("eps_modulus,")
    code, out, _ = run(capsys, "plotdata", "stokes_limit_scan", "--a", "0.3", "--b", "0.6", "--eps-grid", "")
    assert code == 0 and len(out.strip().splitlines()) == 1


def test_verify_monodromy_default(capsys):
    code, out, _ = run(capsys, "verify", "monodromy")
    assert code == 0
    rep = json.loads(out)
    jsonschema.validate(rep, _schema("verify_report.schema.json"))
    assert rep["all_pass"]
    assert all(r["residual"] <= 1e-6 for r in rep["results"])
    assert any(r["identity"].startswith("composition") for r in rep["results"])


def test_verify_borel_convergent_branch(capsys):
    code, out, _ = run(capsys, "verify", "borel", "--a", "-1", "--b", "0.4")
    assert code == 0
    rep = json.loads(out)
    g = [r for r in rep["results"] if r["identity"].startswith("g_stokes_jump")]
    assert g and all(r["branch"] == "lambda_zero" and r["pass"] for r in g)


def test_verify_deterministic(capsys):
    outs = [run(capsys, "verify", "symmetry", "--seed", "7")[1] for _ in range(2)]
    assert outs[0] == outs[1]
    outs = [run(capsys, "verify", "borel", "--seed", "3")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_verify_failure_exit_status(capsys, monkeypatch):
    def failing(cfg, rng):
        res = []
        cli._check(res, "always_fails", 1.0, 1e-3)
        return res
    monkeypatch.setitem(cli.VERIFY, "symmetry", failing)
    code, out, _ = run(capsys, "verify", "symmetry")
    assert code == 2
    assert json.loads(out)["all_pass"] is False


def test_plot_stokes_limit_scan_monotone(capsys):
    code, out, _ = run(capsys, "plotdata", "stokes_limit_scan", "--a", "0.3", "--b", "0.55")
    assert code == 0
    rows = _rows(out)
    mods = [float(r["eps_modulus"]) for r in rows]
    assert mods == pytest.approx([1e-1, 1e-2, 1e-3, 1e-4])
    err = [float(r["lambda_err"]) for r in rows]
    assert all(e1 < e0 for e0, e1 in zip(err, err[1:]))


def test_plot_h_limit_scan(capsys):
    code, out, _ = run(capsys, "plotdata", "h_limit_scan", "--a", "0.3", "--b", "0.7")
    assert code == 0
    rows = _rows(out)
    by_x = {}
    for r in rows:
        by_x.setdefault((r["x_re"], r["x_im"]), []).append(float(r["abs_diff"]))
    assert len(by_x) == 5
    for d in by_x.values():
        assert len(d) == 5 and all(e1 < e0 for e0, e1 in zip(d, d[1:]))


def test_plot_riccati_portrait(capsys, tmp_path):
    out_file = tmp_path / "portrait.csv"
    code, _, _ = run(capsys, "plotdata", "riccati_portrait", "--a", "0.3", "--b", "0.7",
                     "--eps", "0.05@0", "--out", str(out_file))
    assert code == 0
    rows = _rows(out_file.read_text())
    curves = {r["curve"] for r in rows}
    assert {"rho2", "rho3"} <= curves and any(c.startswith("trajectory") for c in curves)

    def near(curve, x, y):
        return min(abs(complex(float(r["x_re"]), float(r["x_im"])) - x)
                   + abs(complex(float(r["y_re"]), float(r["y_im"])) - y)
                   for r in rows if r["curve"] == curve)
    assert near("rho2", 0, 1) <= 1e-12
    assert near("rho3", 0.05, 0) <= 1e-12


def test_branched_point_round_trip(capsys):
    # eps is written as (modulus, argument); the argument keeps the chosen lift
    code, out, _ = run(capsys, "stokes", "--a", "0.3", "--b", "0.6", "--eps", "0.01@4.0", "--sector", "-")
    r = _rows(out)[0]
    assert float(r["eps_argument"]) == 4.0 and float(r["eps_modulus"]) == 0.01
    assert not math.isnan(float(r["lambda_re"]))
