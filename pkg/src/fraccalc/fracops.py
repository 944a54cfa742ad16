"""Fractional derivatives and integrals, Sobolev-chain norms, kernels.

The fractional derivative of order alpha is the functional calculus
applied to the symbol z^alpha (principal branch); on the contour
Re z = rho > 0 the branch cut is never touched.  Negative orders with
rho = 0 are rejected: the symbol is singular at xi = 0 and the operator
is bounded iff rho != 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gammafn import gamma
from .spectral import (
    MultiplierSymbol,
    SpectrumFunction,
    fl_transform,
    frequencies,
)
from .timegrid import GridFunction, GridSpec

__all__ = [
    "SobolevElement",
    "zpow_symbol",
    "frac_derivative",
    "frac_integral",
    "sobolev_norm",
    "g_kernel",
    "heaviside",
    "dirac_spectrum",
]


@dataclass(frozen=True)
class SobolevElement:
    """An element of H_rho^alpha represented by its spectral data.

    Meaningful for every real alpha; for alpha < 0 (extrapolation
    spaces, e.g. the Dirac source) no GridFunction representative
    exists and only the spectrum is stored.
    """

    spectrum: SpectrumFunction
    alpha: float


def zpow_symbol(alpha: float) -> MultiplierSymbol:
    """The symbol z^alpha on the principal branch."""
    return MultiplierSymbol(lambda z: np.power(z, alpha), label=f"z^{alpha:g}")


def _apply_zpow_spectrum(U: SpectrumFunction, alpha: float) -> SpectrumFunction:
    z = 1j * frequencies(U.spec) + U.rho
    fz = np.power(z, alpha)
    if not np.all(np.isfinite(fz)):
        raise ValueError(f"symbol z^{alpha:g} singular on the grid (rho={U.rho:g})")
    return SpectrumFunction(U.spec, U.rho, fz[:, None] * U.coeffs)


def frac_derivative(u, rho: float, alpha: float):
    """d^alpha u via the symbol z^alpha; alpha = 0 is the identity.

    Accepts a GridFunction (returns one) or a SobolevElement (returns
    one, with the order tag decreased by alpha).
    """
    if alpha < 0 and rho == 0:
        raise ValueError("fractional integral requires rho != 0 (symbol singular at xi=0)")
    if isinstance(u, SobolevElement):
        return SobolevElement(_apply_zpow_spectrum(u.spectrum, alpha), u.alpha - alpha)
    if alpha == 0:
        return GridFunction(u.spec, u.values.copy())
    from .spectral import apply_symbol

    return apply_symbol(zpow_symbol(alpha), u, rho)


def frac_integral(u, rho: float, alpha: float):
    """d^{-alpha} u, bounded with norm rho^{-alpha} for rho > 0."""
    if not rho > 0:
        raise ValueError(f"frac_integral requires rho > 0, got {rho:g}")
    if not alpha > 0:
        raise ValueError(f"frac_integral requires alpha > 0, got {alpha:g}")
    return frac_derivative(u, rho, -alpha)


def sobolev_norm(u, rho: float, alpha: float) -> float:
    """The H_rho^alpha norm: ( sum |i xi + rho|^{2 alpha} |coeff|^2 dxi )^{1/2}."""
    if rho == 0:
        raise ValueError("sobolev_norm requires rho != 0")
    if isinstance(u, SobolevElement):
        U = u.spectrum
    else:
        U = fl_transform(u, rho)
    w = np.abs(1j * frequencies(U.spec) + U.rho) ** (2.0 * alpha)
    return float(np.sqrt(np.sum(w[:, None] * np.abs(U.coeffs) ** 2) * U.dxi))


def g_kernel(beta: float, spec: GridSpec, h_vec=1.0) -> GridFunction:
    """Samples of g_beta(t) h_vec = t^beta chi_{t>0}(t)/Gamma(beta+1) h_vec.

    For beta < 0 the kernel is integrable but unbounded at 0+; the first
    positive node takes the cell average (1/h) Int_0^{t1+h/2} g_beta,
    which preserves the zeroth moment to O(h).  All later nodes take
    pointwise values; every node with t <= 0 is 0.
    """
    if not beta > -1.0:
        raise ValueError(f"g_kernel requires beta > -1, got {beta:g}")
    h_vec = np.atleast_1d(np.asarray(h_vec, dtype=complex))
    t = spec.times
    vals = np.zeros(spec.n)
    pos = t > 0
    vals[pos] = t[pos] ** beta / gamma(beta + 1.0)
    if beta < 0 and np.any(pos):
        k1 = int(np.argmax(pos))
        t1 = t[k1]
        vals[k1] = (t1 + spec.h / 2.0) ** (beta + 1.0) / (spec.h * gamma(beta + 2.0))
    return GridFunction(spec, vals[:, None] * h_vec[None, :])


def heaviside(spec: GridSpec, h_vec=1.0) -> GridFunction:
    """chi_{t>0} h_vec = g_0 h_vec, with chi(0) = 0."""
    return g_kernel(0.0, spec, h_vec)


def dirac_spectrum(rho: float, y0, spec: GridSpec) -> SobolevElement:
    """delta_0 y0 as an H_rho^{-1} element: constant spectrum y0/sqrt(2 pi)."""
    if not rho > 0:
        raise ValueError(f"dirac_spectrum requires rho > 0, got {rho:g}")
    y0 = np.atleast_1d(np.asarray(y0, dtype=complex))
    coeffs = np.ones((spec.n, 1)) * (y0[None, :] / np.sqrt(2.0 * np.pi))
    return SobolevElement(SpectrumFunction(spec, rho, coeffs), alpha=-1.0)
