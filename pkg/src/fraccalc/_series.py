"""Fractional power-series bootstrap for the solver front-ends.

Solutions of d^alpha z = f~(., z + y0) behave like sums of powers
t^{k alpha + m} near 0+, and the Nemytskii image f~(., z + y0) jumps at
0+.  Pointwise sampling of such functions gives the sampled-symbol
calculus a slowly decaying spectral error that the e^{rho t}
re-weighting amplifies catastrophically at the right end of the window.

The solver therefore splits off the leading singular part analytically:
this module computes a truncated expansion sum_i c_i t^{beta_i}
chi_{t>0} of the fixed point's Nemytskii image from a second-order
Taylor model of f at (0+, y0), using the exact action
d^{-alpha} (t^beta chi) = (Gamma(beta+1)/Gamma(beta+alpha+1))
t^{beta+alpha} chi.  The spectral calculus then only ever touches the
smooth remainder.
"""

from __future__ import annotations

import numpy as np

from .gammafn import gamma
from .timegrid import GridSpec

# Truncation horizon: powers above t^B are smooth enough that their
# sampled-symbol treatment is below every verification budget.
HORIZON = 3.0

_KEY_DECIMALS = 10


def _key(beta: float) -> float:
    return round(float(beta), _KEY_DECIMALS)


def series_add(*terms: dict) -> dict:
    out: dict = {}
    for s in terms:
        for b, c in s.items():
            out[b] = out.get(b, 0) + c
    return out


def series_scale(s: dict, factor) -> dict:
    return {b: factor * c for b, c in s.items()}


def series_mul(s1: dict, s2: dict, horizon: float = HORIZON) -> dict:
    """Coefficientwise product (d = 1 series only), truncated."""
    out: dict = {}
    for b1, c1 in s1.items():
        for b2, c2 in s2.items():
            b = _key(b1 + b2)
            if b <= horizon:
                out[b] = out.get(b, 0) + c1 * c2
    return out


def series_frac_integral(s: dict, alpha: float, horizon: float = HORIZON) -> dict:
    """Exact d^{-alpha} on sum c t^beta chi, dropping non-integrable terms."""
    out: dict = {}
    for b, c in s.items():
        bb = _key(b + alpha)
        if b > -1.0 and bb <= horizon + alpha:
            out[bb] = c * gamma(b + 1.0) / gamma(b + 1.0 + alpha)
    return out


def series_sample(s: dict, spec: GridSpec, dim: int) -> np.ndarray:
    """Samples of sum c t^beta chi_{t>0} on the grid (n x dim)."""
    t = spec.times
    pos = t > 0
    out = np.zeros((spec.n, dim), dtype=complex)
    for b, c in s.items():
        powed = np.zeros(spec.n)
        powed[pos] = t[pos] ** float(b)
        out += powed[:, None] * np.atleast_1d(np.asarray(c, dtype=complex))[None, :]
    return out


class TaylorModel:
    """Second-order Taylor data of f at (0+, y0), by finite differences.

    Carries f00, f10 (vectors), the Jacobian f01, and -- for scalar
    problems -- the second-order coefficients f20, f11, f02.  Truncation
    of the model only perturbs expansion coefficients of high order,
    which stay consistent corrections (exact image of what is
    subtracted), so it never biases the solve.
    """

    def __init__(self, rhs, y0):
        y0 = np.atleast_1d(np.asarray(y0, dtype=complex))
        d = rhs.dim
        dt, dy = 1e-5, 1e-5

        def f(t, y):
            if rhs.real_mode:
                y = np.real(y)
            return np.atleast_1d(np.asarray(rhs.f(float(t), y), dtype=complex))

        self.dim = d
        self.f00 = f(0.0, y0)
        self.f10 = (-3.0 * f(0.0, y0) + 4.0 * f(dt, y0) - f(2 * dt, y0)) / (2 * dt)
        self.f01 = np.empty((d, d), dtype=complex)
        for j in range(d):
            e = np.zeros(d)
            e[j] = dy
            self.f01[:, j] = (f(0.0, y0 + e) - f(0.0, y0 - e)) / (2 * dy)
        if d == 1:
            e = np.array([dy])
            # one-sided second derivative in t
            self.f20 = (f(0.0, y0) - 2.0 * f(dt, y0) + f(2 * dt, y0)) / dt**2
            self.f02 = (f(0.0, y0 + e) - 2.0 * f(0.0, y0) + f(0.0, y0 - e)) / dy**2
            self.f11 = (
                f(dt, y0 + e) - f(dt, y0 - e) - f(0.0, y0 + e) + f(0.0, y0 - e)
            ) / (2 * dy * dt)
        else:
            self.f20 = self.f02 = self.f11 = None

    def compose(self, w_series: dict, horizon: float = HORIZON) -> dict:
        """Series of f(t, y0 + w(t)) for a series-valued perturbation w."""
        out = {_key(0.0): self.f00, _key(1.0): self.f10}
        jw = {b: self.f01 @ np.atleast_1d(c) for b, c in w_series.items()}
        out = series_add(out, jw)
        if self.dim == 1 and self.f20 is not None:
            t1 = {_key(1.0): np.atleast_1d(1.0 + 0j)}
            out = series_add(
                out,
                series_scale({_key(2.0): np.atleast_1d(1.0 + 0j)}, 0.5 * self.f20[0]),
                series_scale(series_mul(t1, w_series, horizon), self.f11[0]),
                series_scale(series_mul(w_series, w_series, horizon), 0.5 * self.f02[0]),
            )
        return {b: c for b, c in out.items() if b <= horizon}


def caputo_expansion(rhs, y0, alpha: float, horizon: float = HORIZON) -> dict:
    """Expansion of F(z) = f~(., z + y0) at the Caputo fixed point.

    Bootstraps z = d^{-alpha} F(z) on truncated series; terms only move
    up in order, so ceil(horizon/alpha) + 1 sweeps reach a fixed point.
    """
    model = TaylorModel(rhs, y0)
    z: dict = {}
    sweeps = int(np.ceil(horizon / alpha)) + 1
    for _ in range(min(sweeps, 64)):
        z = series_frac_integral(model.compose(z, horizon), alpha, horizon)
    return model.compose(z, horizon)


def rl_expansion(rhs, y0, alpha: float, horizon: float = HORIZON):
    """Expansions for the Riemann-Liouville z-equation d z = G(z).

    G(z)(t) = f~(t, d^{1-alpha} z(t) + g_{alpha-1}(t) y0); the seed
    w = g_{alpha-1} y0 is singular (t^{alpha-1}), so G itself carries
    integrable negative powers for alpha < 1.  Returns the pair
    (series of G at the fixed point, series of z).
    """
    model = TaylorModel(rhs, y0)
    y0 = np.atleast_1d(np.asarray(y0, dtype=complex))
    seed = {_key(alpha - 1.0): y0 / gamma(alpha)}
    z: dict = {}
    sweeps = int(np.ceil((horizon + 1.0) / alpha)) + 1
    g_series: dict = {}
    for _ in range(min(sweeps, 64)):
        w = series_add(series_frac_integral(z, -(1.0 - alpha), horizon), seed)
        g_series = model.compose(w, horizon)
        z = series_frac_integral(g_series, 1.0, horizon)
    return g_series, z
