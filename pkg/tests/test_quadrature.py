"""Time-domain product-integration oracle."""

import math

import numpy as np
import pytest

from fraccalc.quadrature import kernel_weights, rl_convolution, verify_laplace_symbol
from fraccalc.timegrid import GridFunction, heaviside, solver_grid

SPEC = solver_grid(1024, 1.0 / 32)


def test_kernel_weights_pinned_values():
    w = kernel_weights(0.5, 1.0, 4)
    g = math.gamma(1.5)
    np.testing.assert_allclose(
        w,
        [1.0 / g, (2**0.5 - 1) / g, (3**0.5 - 2**0.5) / g, (2.0 - 3**0.5) / g],
        rtol=1e-13,
    )
    assert w[0] == pytest.approx(1.12838, abs=1e-5)
    assert w[1] == pytest.approx(0.46739, abs=1e-5)
    assert w[2] == pytest.approx(0.35864, abs=1e-5)


def test_kernel_weights_telescope():
    # sum_{j<m} w_j = (m h)^alpha / Gamma(alpha+1), exactly
    for alpha in (0.3, 0.5, 1.5):
        w = kernel_weights(alpha, 0.25, 64)
        partial = np.cumsum(w)
        m = np.arange(1, 65, dtype=float)
        np.testing.assert_allclose(
            partial, (m * 0.25) ** alpha / math.gamma(alpha + 1.0), rtol=1e-12
        )


def test_kernel_weights_validation():
    with pytest.raises(ValueError):
        kernel_weights(2.0, 1.0, 4)
    with pytest.raises(ValueError):
        kernel_weights(0.0, 1.0, 4)
    with pytest.raises(ValueError):
        kernel_weights(0.5, -1.0, 4)


def test_rl_convolution_zero_and_validation():
    u = GridFunction(SPEC, np.zeros(SPEC.n))
    assert np.all(rl_convolution(u, 0.7).values == 0.0)
    with pytest.raises(ValueError):
        rl_convolution(u, 2.5)


@pytest.mark.parametrize("alpha", [0.3, 0.5, 1.0, 1.5])
def test_rl_convolution_exact_for_heaviside(alpha):
    # midpoint cell moments telescope to t^alpha/Gamma(alpha+1) exactly
    v = rl_convolution(heaviside(SPEC), alpha).values[:, 0].real
    t = SPEC.times
    pos = t > 0
    ref = t[pos] ** alpha / math.gamma(alpha + 1.0)
    np.testing.assert_allclose(v[pos], ref, rtol=1e-12)
    assert np.all(v[~pos] == 0.0)


def test_rl_convolution_causal_by_construction():
    t = SPEC.times
    u = GridFunction(SPEC, np.where(t > 5.0, np.sin(t), 0.0))
    v = rl_convolution(u, 0.5).values[:, 0]
    assert np.all(v[t <= 5.0] == 0.0)  # weights only look backward


def test_rl_convolution_never_reads_rho():
    import inspect

    assert "rho" not in inspect.signature(rl_convolution).parameters


def test_verify_laplace_symbol():
    for alpha in (0.5, 1.0):
        for rho in (1.0, 2.0):
            for xi in (0.0, 1.0, 5.0):
                lhs, rhs, err = verify_laplace_symbol(alpha, rho, xi)
                assert err <= 1e-2, (alpha, rho, xi, err)
    with pytest.raises(ValueError):
        verify_laplace_symbol(0.5, 0.0, 1.0)
