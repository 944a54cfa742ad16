"""Batch front-end: frac apply | solve | verify | bench.

One command per process.  Config is a single JSON document with
sections {grid, operator|solver, rhs, input, output}; unknown keys are
rejected.  Exit codes: 0 success, 2 config error, 3 numeric failure
(non-contractive / overflow), 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

import numpy as np

from .fracops import frac_derivative, frac_integral, g_kernel, heaviside
from .gridio import read_gridfunction, write_gridfunction, write_spectrum
from .quadrature import rl_convolution
from .rhs import forced_rhs, linear_rhs, logistic_rhs
from .solver import (
    NonContractiveError,
    SolverConfig,
    solve_caputo,
    solve_riemann_liouville,
)
from .timegrid import GridFunction, GridSpec, sample, solver_grid
from .verify import run_suite

EXIT_OK, EXIT_CONFIG, EXIT_NUMERIC, EXIT_VERIFY = 0, 2, 3, 4


class ConfigError(ValueError):
    pass


def _section(cfg: dict, name: str, allowed: set, required: set = frozenset()):
    sec = cfg.get(name)
    if sec is None:
        if required:
            raise ConfigError(f"missing config section {name!r}")
        return {}
    if not isinstance(sec, dict):
        raise ConfigError(f"section {name!r} must be an object")
    unknown = set(sec) - allowed
    if unknown:
        raise ConfigError(f"unknown keys in {name!r}: {sorted(unknown)}")
    missing = required - set(sec)
    if missing:
        raise ConfigError(f"missing keys in {name!r}: {sorted(missing)}")
    return sec


def _check_toplevel(cfg: dict, allowed: set):
    if not isinstance(cfg, dict):
        raise ConfigError("config must be a JSON object")
    unknown = set(cfg) - allowed
    if unknown:
        raise ConfigError(f"unknown config sections: {sorted(unknown)}")


def _grid_from(cfg: dict) -> GridSpec:
    sec = _section(cfg, "grid", {"n", "h", "t_min"})
    if not sec:
        return solver_grid()
    n = int(sec.get("n", 4096))
    h = float(sec.get("h", 1.0 / 64))
    if "t_min" in sec:
        return GridSpec(t_min=float(sec["t_min"]), n=n, h=h)
    return solver_grid(n, h)


def _input_from(cfg: dict, spec: GridSpec) -> GridFunction:
    sec = _section(cfg, "input", {"kind", "path", "beta", "center", "width"},
                   required={"kind"})
    kind = sec["kind"]
    if kind == "heaviside":
        return heaviside(spec)
    if kind == "g_kernel":
        return g_kernel(float(sec.get("beta", 0.0)), spec)
    if kind == "gaussian":
        c, w = float(sec.get("center", 2.0)), float(sec.get("width", 0.5))
        return sample(lambda t: np.exp(-(((t - c) / w) ** 2)), spec)
    if kind == "csv":
        return read_gridfunction(sec["path"], spec)
    raise ConfigError(f"unknown input kind {kind!r}")


def _rhs_from(cfg: dict):
    sec = _section(cfg, "rhs",
                   {"kind", "lambda", "clip", "rho0", "forcing_csv"},
                   required={"kind"})
    kind = sec["kind"]
    rho0 = float(sec.get("rho0", 1.0))
    lam = complex(sec.get("lambda", -1.0))
    if kind == "linear":
        return linear_rhs(lam, rho0=rho0)
    if kind == "logistic":
        return logistic_rhs(lam.real, clip=float(sec.get("clip", 10.0)), rho0=rho0)
    if kind == "forced":
        path = sec.get("forcing_csv")
        if path is None:
            raise ConfigError("forced rhs needs forcing_csv")
        forcing_fn = read_gridfunction(path)
        t_f, v_f = forcing_fn.spec.times, forcing_fn.values[:, 0].real
        return forced_rhs(lam, lambda s: float(np.interp(s, t_f, v_f)), rho0=rho0)
    raise ConfigError(f"unknown rhs kind {kind!r}")


def _load_config(path) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc


def _outdir(args) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def cmd_apply(args) -> int:
    cfg = _load_config(args.config)
    _check_toplevel(cfg, {"grid", "operator", "input", "output"})
    spec = _grid_from(cfg)
    op = _section(cfg, "operator", {"kind", "alpha", "rho"}, required={"kind", "alpha"})
    out_sec = _section(cfg, "output", {"prefix"})
    prefix = out_sec.get("prefix", "apply")
    u = _input_from(cfg, spec)
    alpha, rho = float(op["alpha"]), float(op.get("rho", 1.0))
    kind = op["kind"]
    if kind == "derivative":
        result = frac_derivative(u, rho, alpha)
    elif kind == "integral":
        result = frac_integral(u, rho, alpha)
    elif kind == "rl_oracle":
        result = rl_convolution(u, alpha)
    else:
        raise ConfigError(f"unknown operator kind {kind!r}")
    out = _outdir(args)
    write_gridfunction(out / f"{prefix}.csv", result)
    with open(out / f"{prefix}.json", "w") as fh:
        json.dump({"operator": kind, "alpha": alpha, "rho": rho,
                   "grid": {"t_min": spec.t_min, "n": spec.n, "h": spec.h}},
                  fh, indent=2, sort_keys=True)
        fh.write("\n")
    return EXIT_OK


def cmd_solve(args) -> int:
    cfg = _load_config(args.config)
    _check_toplevel(cfg, {"grid", "solver", "rhs", "output"})
    spec = _grid_from(cfg)
    sol = _section(cfg, "solver",
                   {"kind", "alpha", "rho", "tol", "max_iter", "q_target", "y0"},
                   required={"kind", "alpha"})
    out_sec = _section(cfg, "output", {"prefix"})
    prefix = out_sec.get("prefix", "solve")
    rhs = _rhs_from(cfg)
    config = SolverConfig(
        alpha=float(sol["alpha"]),
        rho=float(sol.get("rho", 0.0)),
        tol=float(sol.get("tol", 1e-12)),
        max_iter=int(sol.get("max_iter", 400)),
        q_target=float(sol.get("q_target", 0.5)),
        spec=spec,
    )
    y0 = np.atleast_1d(np.asarray(sol.get("y0", 1.0), dtype=complex))
    kind = sol["kind"]
    out = _outdir(args)
    try:
        if kind == "caputo":
            y, report = solve_caputo(rhs, y0, config)
            write_gridfunction(out / f"{prefix}.csv", y)
        elif kind == "riemann_liouville":
            z, y_el, report = solve_riemann_liouville(rhs, y0, config)
            write_gridfunction(out / f"{prefix}_z.csv", z)
            write_spectrum(out / f"{prefix}_y_spectrum.csv", y_el.spectrum)
        else:
            raise ConfigError(f"unknown solver kind {kind!r}")
    except NonContractiveError as exc:
        print(f"error: {exc} (try rho >= {2 * exc.rho:g})", file=sys.stderr)
        return EXIT_NUMERIC
    with open(out / f"{prefix}_report.json", "w") as fh:
        json.dump({"rho_used": report.rho_used,
                   "iterations": report.iterations,
                   "residual": report.residual,
                   "contraction_estimate": report.contraction_estimate,
                   "converged": report.converged}, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    table = run_suite(args.suite, seed=args.seed, threads=args.threads,
                      budget_override=args.budget)
    out = _outdir(args)
    with open(out / "verify.json", "w") as fh:
        json.dump(table, fh, indent=2, sort_keys=True, default=float)
        fh.write("\n")
    for row in table:
        status = "pass" if row["pass"] else "FAIL"
        print(f"{status}  {row['check']}: defect={row['defect']:.3e} "
              f"budget={row['budget']:.3e}")
    return EXIT_OK if all(r["pass"] for r in table) else EXIT_VERIFY


def cmd_bench(args) -> int:
    cfg = _load_config(args.config) if args.config else {}
    _check_toplevel(cfg, {"bench"})
    sec = _section(cfg, "bench", {"n_list", "alpha", "rho", "repeats"})
    n_list = [int(n) for n in sec.get("n_list", [1024, 2048, 4096, 8192, 16384])]
    alpha = float(sec.get("alpha", 0.5))
    rho = float(sec.get("rho", 1.0))
    repeats = max(5, int(sec.get("repeats", 5)))
    rows = []
    rng = np.random.default_rng(args.seed)
    for n in n_list:
        spec = solver_grid(n, 1.0 / 64)
        u = GridFunction(spec, rng.standard_normal((n, 1)))
        t_spec, t_oracle = [], []
        for _ in range(repeats):
            t0 = time.perf_counter()
            frac_integral(u, rho, alpha)
            t_spec.append(time.perf_counter() - t0)
            t0 = time.perf_counter()
            rl_convolution(u, alpha)
            t_oracle.append(time.perf_counter() - t0)
        rows.append({"n": n, "spectral_s": float(np.median(t_spec)),
                     "oracle_s": float(np.median(t_oracle))})
    for prev, cur in zip(rows, rows[1:]):
        cur["spectral_ratio"] = cur["spectral_s"] / prev["spectral_s"]
        cur["oracle_ratio"] = cur["oracle_s"] / prev["oracle_s"]
    out = _outdir(args)
    with open(out / "bench.json", "w") as fh:
        json.dump(rows, fh, indent=2, sort_keys=True)
        fh.write("\n")
    for row in rows:
        print(json.dumps(row, sort_keys=True))
    return EXIT_OK


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="frac",
                                     description="spectral fractional calculus")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("apply", "solve"):
        p = sub.add_parser(name)
        p.add_argument("--config", required=True)
        p.add_argument("--out", default=".")
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--seed", type=int, default=0)
    p = sub.add_parser("verify")
    p.add_argument("suite", nargs="?", default="core")
    p.add_argument("--config", default=None)
    p.add_argument("--out", default=".")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=float, default=None)
    p = sub.add_parser("bench")
    p.add_argument("--config", default=None)
    p.add_argument("--out", default=".")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)
    handler = {"apply": cmd_apply, "solve": cmd_solve,
               "verify": cmd_verify, "bench": cmd_bench}[args.command]
    try:
        return handler(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ValueError, OverflowError) as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
