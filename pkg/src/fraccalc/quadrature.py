"""Time-domain oracle for the fractional integral.

Product integration of the Riemann-Liouville convolution
d^{-alpha} f(t) = Int_{-inf}^t (t-s)^{alpha-1}/Gamma(alpha) f(s) ds:
the input is treated as piecewise constant per grid cell and the
singular kernel is integrated exactly over each cell.  Direct O(n^2)
evaluation, deliberately independent of the spectral code path.
"""

from __future__ import annotations

import numpy as np

from .gammafn import gamma
from .spectral import fl_transform, frequencies
from .timegrid import GridFunction

__all__ = ["kernel_weights", "rl_convolution", "verify_laplace_symbol"]


def kernel_weights(alpha: float, h: float, count: int) -> np.ndarray:
    """Exact cell moments w_j = h^alpha ((j+1)^alpha - j^alpha)/Gamma(alpha+1).

    Telescoping gives sum_{j<m} w_j = (m h)^alpha / Gamma(alpha+1).
    """
    if not (0.0 < alpha < 2.0):
        raise ValueError(f"kernel_weights requires alpha in (0,2), got {alpha:g}")
    if not h > 0:
        raise ValueError(f"h must be positive, got {h:g}")
    j = np.arange(count, dtype=float)
    return h**alpha * ((j + 1.0) ** alpha - j**alpha) / gamma(alpha + 1.0)


def _midpoint_weights(alpha: float, h: float, count: int) -> np.ndarray:
    """Cell moments for cells centered on the nodes.

    Cell k is [t_k - h/2, t_k + h/2]; for the evaluation node m > k the
    kernel is integrated over lag [(m-k-1/2) h, (m-k+1/2) h], and the
    current cell contributes its half-cell moment (h/2)^alpha/Gamma(alpha+1).
    Exact for Heaviside data: partial sums telescope to t_m^alpha/Gamma(alpha+1).
    """
    j = np.arange(count, dtype=float)
    w = h**alpha * ((j + 0.5) ** alpha - np.abs(j - 0.5) ** alpha) / gamma(alpha + 1.0)
    w[0] = (h / 2.0) ** alpha / gamma(alpha + 1.0)
    return w


def rl_convolution(u: GridFunction, alpha: float) -> GridFunction:
    """Product-integration fractional integral; never reads rho."""
    if not (0.0 < alpha < 2.0):
        raise ValueError(f"rl_convolution requires alpha in (0,2), got {alpha:g}")
    n, h = u.spec.n, u.spec.h
    w = _midpoint_weights(alpha, h, n)
    out = np.empty_like(u.values)
    for col in range(u.dim):
        # np.convolve is a direct O(n^2) summation, not FFT-based.
        out[:, col] = np.convolve(u.values[:, col], w)[:n]
    return GridFunction(u.spec, out)


def verify_laplace_symbol(alpha: float, rho: float, xi: float):
    """Check sqrt(2 pi) L_rho(g_{alpha-1})(xi) = (i xi + rho)^{-alpha}.

    Returns (lhs, rhs, relative error), with lhs read off the discrete
    Fourier-Laplace transform at the grid frequency nearest xi.
    """
    if not (alpha > 0 and rho > 0):
        raise ValueError("verify_laplace_symbol requires alpha > 0 and rho > 0")
    from .fracops import g_kernel
    from .timegrid import solver_grid

    spec = solver_grid()
    U = fl_transform(g_kernel(alpha - 1.0, spec), rho)
    grid_xi = frequencies(spec)
    j = int(np.argmin(np.abs(grid_xi - xi)))
    lhs = complex(np.sqrt(2.0 * np.pi) * U.coeffs[j, 0])
    rhs = complex((1j * grid_xi[j] + rho) ** (-alpha))
    err = abs(lhs - rhs) / abs(rhs)
    return lhs, rhs, err
