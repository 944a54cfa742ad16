"""Fourier-Laplace transform and the functional calculus F(d/dt).

L_rho = F e^{-rho m} with the unitary convention
F f(xi) = (2 pi)^{-1/2} Int f(t) e^{-i xi t} dt.  The discrete version
is an FFT with explicit phase factors for t_min != 0; the discrete
Plancherel identity (sum |coeff|^2 * dxi = weighted_norm^2) is exact up
to rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .timegrid import GridFunction, GridSpec, weighted_norm

__all__ = [
    "SpectrumFunction",
    "MultiplierSymbol",
    "fl_transform",
    "fl_inverse",
    "apply_symbol",
    "operator_norm",
]

_SQRT2PI = np.sqrt(2.0 * np.pi)

# e^{-rho t} overflows a double past ~709; reject windows/weights that
# would silently produce inf.
_EXP_LIMIT = 700.0


def frequencies(spec: GridSpec) -> np.ndarray:
    """DFT frequencies xi_j = 2 pi jtilde/(n h), signed (fftshift order)."""
    return 2.0 * np.pi * np.fft.fftshift(np.fft.fftfreq(spec.n, d=spec.h))


@dataclass(frozen=True)
class SpectrumFunction:
    """Fourier-Laplace coefficients of a grid function (n x d complex)."""

    spec: GridSpec
    rho: float
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex)
        if c.ndim == 1:
            c = c[:, None]
        if c.shape[0] != self.spec.n:
            raise ValueError("coefficient count does not match grid")
        if not np.all(np.isfinite(c)):
            raise ValueError("non-finite spectral coefficients")
        object.__setattr__(self, "coeffs", c)

    @property
    def dim(self) -> int:
        return self.coeffs.shape[1]

    @property
    def xi(self) -> np.ndarray:
        return frequencies(self.spec)

    @property
    def dxi(self) -> float:
        return 2.0 * np.pi / (self.spec.n * self.spec.h)

    def norm(self) -> float:
        """L2 norm of the spectrum with dxi weights (= weighted_norm of origin)."""
        return float(np.sqrt(np.sum(np.abs(self.coeffs) ** 2) * self.dxi))


@dataclass(frozen=True)
class MultiplierSymbol:
    """A symbol F evaluated on the contour z = i xi + rho."""

    eval: Callable[[np.ndarray], np.ndarray]
    label: str = ""


def _weight_checked(spec: GridSpec, rho: float) -> np.ndarray:
    if rho * spec.t_min < -_EXP_LIMIT or rho * spec.t_max > _EXP_LIMIT:
        raise ValueError(
            f"window/weight incompatible: e^(-rho t) overflows (rho={rho:g})"
        )
    return np.exp(-rho * spec.times)


def fl_transform(u: GridFunction, rho: float) -> SpectrumFunction:
    """L_rho u: weight by e^{-rho t}, then the unitary discrete Fourier transform."""
    spec = u.spec
    w = _weight_checked(spec, rho)[:, None] * u.values
    xi = frequencies(spec)
    phase = np.exp(-1j * xi * spec.t_min)[:, None]
    coeffs = (spec.h / _SQRT2PI) * phase * np.fft.fftshift(np.fft.fft(w, axis=0), axes=0)
    return SpectrumFunction(spec, rho, coeffs)


def fl_inverse(U: SpectrumFunction) -> GridFunction:
    """Exact discrete inverse of fl_transform."""
    spec = U.spec
    xi = frequencies(spec)
    phase = np.exp(1j * xi * spec.t_min)[:, None]
    w = np.fft.ifft(np.fft.ifftshift(phase * U.coeffs, axes=0), axis=0)
    w *= _SQRT2PI / spec.h
    unweight = np.exp(U.rho * spec.times)
    if not np.all(np.isfinite(unweight)):
        k = int(np.argmax(~np.isfinite(unweight)))
        raise ValueError(f"e^(rho t) overflow at node {k} (t={spec.times[k]:g})")
    return GridFunction(spec, unweight[:, None] * w)


def apply_symbol(F: MultiplierSymbol, u: GridFunction, rho: float) -> GridFunction:
    """F(d/dt) u = L_rho^* F(i xi + rho) L_rho u."""
    U = fl_transform(u, rho)
    z = 1j * U.xi + rho
    fz = np.asarray(F.eval(z), dtype=complex)
    bad = ~np.isfinite(fz)
    if np.any(bad):
        j = int(np.argmax(bad))
        raise ValueError(
            f"symbol {F.label or 'F'} not finite at xi={U.xi[j]:g} (rho={rho:g})"
        )
    return fl_inverse(SpectrumFunction(u.spec, rho, fz[:, None] * U.coeffs))


def operator_norm(F: MultiplierSymbol, rho: float, spec: GridSpec) -> float:
    """Grid sup of |F(i xi + rho)| (a lower bound for the essential sup)."""
    z = 1j * frequencies(spec) + rho
    return float(np.max(np.abs(np.asarray(F.eval(z), dtype=complex))))
