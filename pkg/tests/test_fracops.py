"""Fractional derivative/integral calculus and the Sobolev chain."""

import math

import numpy as np
import pytest

from fraccalc.fracops import (
    SobolevElement,
    dirac_spectrum,
    frac_derivative,
    frac_integral,
    g_kernel,
    heaviside,
    sobolev_norm,
)
from fraccalc.spectral import fl_inverse
from fraccalc.timegrid import sample, solver_grid, weighted_norm

SPEC = solver_grid(1024, 1.0 / 32)


def _bump(center=3.0, width=1.0):
    return sample(lambda t: np.exp(-(((t - center) / width) ** 2)), SPEC)


def test_zero_order_is_identity():
    u = _bump()
    np.testing.assert_allclose(frac_derivative(u, 1.0, 0.0).values, u.values,
                               atol=1e-12)


def test_rho_zero_negative_order_rejected():
    with pytest.raises(ValueError):
        frac_derivative(_bump(), 0.0, -0.5)  # z^{-a} has a pole at xi = 0


def test_frac_integral_positive_args_only():
    with pytest.raises(ValueError):
        frac_integral(_bump(), 1.0, -0.5)
    with pytest.raises(ValueError):
        frac_integral(_bump(), 0.0, 0.5)


@pytest.mark.parametrize("rho", [1.0, 2.0])
def test_inverse_law(rho):
    u = _bump()
    for alpha in (-1.0, -0.5, 0.3, 1.0, 1.7):
        v = frac_derivative(frac_derivative(u, rho, alpha), rho, -alpha)
        dev = weighted_norm(v - u, rho) / weighted_norm(u, rho)
        assert dev <= 1e-10


@pytest.mark.parametrize("rho", [1.0, 2.0])
def test_group_law(rho):
    u = _bump()
    orders = (-1.0, -0.5, 0.3, 1.0, 1.7)
    for a in orders:
        for b in orders:
            lhs = frac_derivative(frac_derivative(u, rho, b), rho, a)
            rhs = frac_derivative(u, rho, a + b)
            dev = weighted_norm(lhs - rhs, rho) / weighted_norm(rhs, rho)
            assert dev <= 1e-10, (a, b)


def test_fractional_integral_of_heaviside_closed_form():
    # d^{-alpha} chi = t^alpha/Gamma(alpha+1) on t > 0 (Corollary-style identity)
    # small rho: e^{rho t} amplifies the spectral floor at the far end of the
    # comparison range, while too-small rho lets the window periodize
    alpha, rho = 0.5, 0.2
    spec = solver_grid()
    v = frac_integral(heaviside(spec), rho, alpha).values[:, 0].real
    t = spec.times
    sel = (t >= 0.5) & (t <= 30.0)
    ref = t[sel] ** alpha / math.gamma(alpha + 1.0)
    assert np.max(np.abs(v[sel] - ref) / ref) <= 1e-3


def test_g_kernel_validation_and_heaviside():
    with pytest.raises(ValueError):
        g_kernel(-1.0, SPEC)
    np.testing.assert_allclose(g_kernel(0.0, SPEC).values,
                               heaviside(SPEC).values)


def test_g_kernel_negative_order_cell_average():
    gk = g_kernel(-0.5, SPEC).values[:, 0].real
    t = SPEC.times
    pos = t > 0
    k1 = int(np.argmax(pos))
    # zeroth moment of the first cell is preserved
    exact = (t[k1] + SPEC.h / 2.0) ** 0.5 / (SPEC.h * math.gamma(1.5))
    assert gk[k1] == pytest.approx(exact, rel=1e-13)
    assert np.all(gk[~pos] == 0.0)


def test_chain_isometry_via_sobolev_norm():
    u = _bump()
    rho, alpha, beta = 2.0, 0.25, 0.75
    v = frac_derivative(u, rho, beta)
    assert sobolev_norm(v, rho, alpha - beta) == pytest.approx(
        sobolev_norm(u, rho, alpha), rel=1e-12
    )


@pytest.mark.parametrize("rho", [1.0, 2.0, 4.0])
@pytest.mark.parametrize("ab", [(-1.0, 0.0), (0.0, 0.5)])
def test_embedding_inequality(rho, ab):
    alpha, beta = ab
    u = _bump()
    assert sobolev_norm(u, rho, alpha) <= rho ** (alpha - beta) * sobolev_norm(
        u, rho, beta
    ) + 1e-10


def test_dirac_spectrum_norm():
    # ||delta_0||_{rho,-1}^2 = int dxi/(2 pi (xi^2 + rho^2)) = 1/(2 rho)
    spec = solver_grid()
    d = dirac_spectrum(1.0, 1.0, spec)
    assert d.alpha == -1.0
    assert sobolev_norm(d, 1.0, -1.0) == pytest.approx(1.0 / np.sqrt(2.0), abs=1e-2)
    with pytest.raises(ValueError):
        dirac_spectrum(0.0, 1.0, spec)


def test_integral_of_dirac_is_heaviside():
    # d^{-1} delta_0 = chi: fundamental theorem on the chain
    spec = solver_grid()
    d = dirac_spectrum(1.0, 1.0, spec)
    v = frac_derivative(d, 1.0, -1.0)
    assert isinstance(v, SobolevElement)
    assert v.alpha == 0.0
    chi = fl_inverse(v.spectrum).values[:, 0].real
    t = spec.times
    # e^{rho t} amplifies the flat spectral floor of the point mass at late
    # times; compare where the weight is moderate
    sel = (t > 0.5) & (t < 5.0)
    assert np.max(np.abs(chi[sel] - 1.0)) <= 1e-2
