"""The frac command line front-end."""

import json

import numpy as np
import pytest

from fraccalc.cli import EXIT_CONFIG, EXIT_NUMERIC, EXIT_VERIFY, main
from fraccalc.gridio import read_gridfunction


def _write(path, cfg):
    path.write_text(json.dumps(cfg))
    return str(path)


def test_apply_integral_heaviside(tmp_path):
    cfg = _write(tmp_path / "c.json", {
        "grid": {"n": 1024, "h": 1 / 32},
        "operator": {"kind": "integral", "alpha": 0.5, "rho": 1.0},
        "input": {"kind": "heaviside"},
        "output": {"prefix": "out"},
    })
    assert main(["apply", "--config", cfg, "--out", str(tmp_path)]) == 0
    meta = json.loads((tmp_path / "out.json").read_text())
    assert meta["alpha"] == 0.5 and meta["operator"] == "integral"
    result = read_gridfunction(tmp_path / "out.csv")
    t = result.spec.times
    # e^{rho t} amplifies the spectral floor at late t; check the early range
    sel = (t >= 1.0) & (t <= 5.0)
    import math
    ref = t[sel] ** 0.5 / math.gamma(1.5)
    assert np.max(np.abs(result.values[sel, 0].real - ref) / ref) <= 1e-2


def test_apply_oracle_and_gaussian(tmp_path):
    cfg = _write(tmp_path / "c.json", {
        "grid": {"n": 512, "h": 1 / 16},
        "operator": {"kind": "rl_oracle", "alpha": 0.7},
        "input": {"kind": "gaussian", "center": 3.0, "width": 0.5},
    })
    assert main(["apply", "--config", cfg, "--out", str(tmp_path)]) == 0
    assert (tmp_path / "apply.csv").exists()


def test_apply_csv_roundtrip(tmp_path):
    cfg1 = _write(tmp_path / "c1.json", {
        "grid": {"n": 512, "h": 1 / 16},
        "operator": {"kind": "integral", "alpha": 0.5, "rho": 1.0},
        "input": {"kind": "gaussian"},
        "output": {"prefix": "first"},
    })
    assert main(["apply", "--config", cfg1, "--out", str(tmp_path)]) == 0
    cfg2 = _write(tmp_path / "c2.json", {
        "grid": {"n": 512, "h": 1 / 16},
        "operator": {"kind": "derivative", "alpha": 0.5, "rho": 1.0},
        "input": {"kind": "csv", "path": str(tmp_path / "first.csv")},
        "output": {"prefix": "second"},
    })
    assert main(["apply", "--config", cfg2, "--out", str(tmp_path)]) == 0
    # derivative of the integral recovers the gaussian (checked in weighted
    # coordinates; e^{rho t} amplifies roundoff at the right window edge)
    back = read_gridfunction(tmp_path / "second.csv")
    t = back.spec.times
    ref = np.exp(-(((t - 2.0) / 0.5) ** 2))
    wdev = np.exp(-t) * np.abs(back.values[:, 0] - ref)
    assert np.max(wdev) <= 1e-8


def test_config_errors_exit_2(tmp_path):
    bad_section = _write(tmp_path / "a.json", {
        "operator": {"kind": "integral", "alpha": 0.5},
        "input": {"kind": "heaviside"},
        "extra": {},
    })
    assert main(["apply", "--config", bad_section, "--out", str(tmp_path)]) == EXIT_CONFIG

    bad_key = _write(tmp_path / "b.json", {
        "operator": {"kind": "integral", "alpha": 0.5, "beta": 1.0},
        "input": {"kind": "heaviside"},
    })
    assert main(["apply", "--config", bad_key, "--out", str(tmp_path)]) == EXIT_CONFIG

    missing = _write(tmp_path / "c.json", {
        "operator": {"kind": "integral"},
        "input": {"kind": "heaviside"},
    })
    assert main(["apply", "--config", missing, "--out", str(tmp_path)]) == EXIT_CONFIG

    unknown_kind = _write(tmp_path / "d.json", {
        "operator": {"kind": "squint", "alpha": 0.5},
        "input": {"kind": "heaviside"},
    })
    assert main(["apply", "--config", unknown_kind, "--out", str(tmp_path)]) == EXIT_CONFIG

    assert main(["apply", "--config", str(tmp_path / "nope.json"),
                 "--out", str(tmp_path)]) == EXIT_CONFIG


def test_solve_caputo(tmp_path):
    cfg = _write(tmp_path / "c.json", {
        "solver": {"kind": "caputo", "alpha": 1.0, "y0": 1.0},
        "rhs": {"kind": "linear", "lambda": -1.0},
        "output": {"prefix": "lin"},
    })
    assert main(["solve", "--config", cfg, "--out", str(tmp_path)]) == 0
    report = json.loads((tmp_path / "lin_report.json").read_text())
    assert report["converged"] and report["rho_used"] == pytest.approx(2.0)
    y = read_gridfunction(tmp_path / "lin.csv")
    t = y.spec.times
    sel = (t >= 0.0) & (t <= 10.0)
    assert np.max(np.abs(y.values[sel, 0].real - np.exp(-t[sel]))) <= 1e-4


def test_solve_riemann_liouville(tmp_path):
    cfg = _write(tmp_path / "c.json", {
        "solver": {"kind": "riemann_liouville", "alpha": 0.75, "rho": 2.0,
                   "y0": 1.0},
        "rhs": {"kind": "linear", "lambda": -1.0},
        "output": {"prefix": "rl"},
    })
    assert main(["solve", "--config", cfg, "--out", str(tmp_path)]) == 0
    assert (tmp_path / "rl_z.csv").exists()
    assert (tmp_path / "rl_y_spectrum.csv").exists()
    report = json.loads((tmp_path / "rl_report.json").read_text())
    assert report["converged"]


def test_solve_noncontractive_exit_3(tmp_path):
    cfg = _write(tmp_path / "c.json", {
        "solver": {"kind": "caputo", "alpha": 1.0, "rho": 0.1, "y0": 1.0,
                   "max_iter": 50},
        "rhs": {"kind": "linear", "lambda": -1.0},
    })
    assert main(["solve", "--config", cfg, "--out", str(tmp_path)]) == EXIT_NUMERIC


def test_verify_command(tmp_path, capsys):
    assert main(["verify", "--out", str(tmp_path), "--threads", "2"]) == 0
    table = json.loads((tmp_path / "verify.json").read_text())
    assert all(row["pass"] for row in table)
    out = capsys.readouterr().out
    assert "pass  chain_isometry" in out


def test_verify_budget_override_exit_4(tmp_path):
    assert main(["verify", "--out", str(tmp_path),
                 "--budget", "1e-300"]) == EXIT_VERIFY


def test_bench_command(tmp_path):
    cfg = _write(tmp_path / "c.json", {
        "bench": {"n_list": [256, 512], "repeats": 5, "alpha": 0.5},
    })
    assert main(["bench", "--config", cfg, "--out", str(tmp_path)]) == 0
    rows = json.loads((tmp_path / "bench.json").read_text())
    assert [r["n"] for r in rows] == [256, 512]
    assert "spectral_ratio" in rows[1] and "oracle_ratio" in rows[1]
