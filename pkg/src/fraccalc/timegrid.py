"""Uniform time grids and exponentially weighted norms.

The paper's function spaces live on all of R; numerically we fix a
finite uniform window [t_min, t_min + n*h) and require every
represented function to be (numerically) supported inside it.  The
weighted L2 norm uses the left-rectangle rule, which keeps the discrete
Parseval identity of the Fourier-Laplace transform exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

__all__ = [
    "GridSpec",
    "GridFunction",
    "solver_grid",
    "sample",
    "exp_weight",
    "weighted_norm",
    "reflect",
    "mask_support",
]


def _is_pow2(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class GridSpec:
    """Uniform grid t_k = t_min + k*h, k = 0..n-1, window [t_min, t_min+n*h)."""

    t_min: float
    n: int
    h: float

    def __post_init__(self):
        if not (_is_pow2(self.n) and self.n >= 8):
            raise ValueError(f"n must be a power of two >= 8, got {self.n}")
        if not self.h > 0:
            raise ValueError(f"h must be positive, got {self.h}")

    @property
    def times(self) -> np.ndarray:
        return self.t_min + self.h * np.arange(self.n)

    @property
    def t_max(self) -> float:
        """Right window edge (exclusive)."""
        return self.t_min + self.n * self.h

    def compatible(self, other: "GridSpec") -> bool:
        return (
            self.t_min == other.t_min and self.n == other.n and self.h == other.h
        )


@dataclass(frozen=True)
class GridFunction:
    """Samples of a C^d-valued function on a GridSpec (n x d complex)."""

    spec: GridSpec
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=complex)
        if v.ndim == 1:
            v = v[:, None]
        if v.shape[0] != self.spec.n:
            raise ValueError(
                f"values has {v.shape[0]} rows, grid has {self.spec.n} nodes"
            )
        if not np.all(np.isfinite(v)):
            raise ValueError("non-finite sample values")
        object.__setattr__(self, "values", v)

    @property
    def dim(self) -> int:
        return self.values.shape[1]

    def _check(self, other: "GridFunction"):
        if not self.spec.compatible(other.spec):
            raise ValueError("incompatible grids")
        if self.dim != other.dim:
            raise ValueError("incompatible dims")

    def __add__(self, other: "GridFunction") -> "GridFunction":
        self._check(other)
        return GridFunction(self.spec, self.values + other.values)

    def __sub__(self, other: "GridFunction") -> "GridFunction":
        self._check(other)
        return GridFunction(self.spec, self.values - other.values)

    def scale(self, c: complex) -> "GridFunction":
        return GridFunction(self.spec, c * self.values)


def solver_grid(n: int = 4096, h: float = 1.0 / 64) -> GridSpec:
    """Canonical solver window with a left guard band of nh/16.

    Nodes are staggered by half a cell (t_min = -nh/16 + h/2) so that
    t = 0 -- where Heaviside data and Nemytskii images jump -- falls on
    a cell boundary instead of a node.  Left-rectangle sampling of a
    jump at a node carries an O(h) half-cell bias; the staggered grid
    restores second-order accuracy of the spectral kernels.
    """
    return GridSpec(t_min=-n * h / 16.0 + h / 2.0, n=n, h=h)


def sample(f: Callable, spec: GridSpec, dim: int = 1) -> GridFunction:
    """Sample f at the grid nodes; exact at nodes, no filtering."""
    t = spec.times
    rows = np.empty((spec.n, dim), dtype=complex)
    for k in range(spec.n):
        val = np.asarray(f(t[k]), dtype=complex).reshape(-1)
        if val.size == 1 and dim > 1:
            val = np.repeat(val, dim)
        if not np.all(np.isfinite(val)):
            raise ValueError(f"non-finite value at node {k} (t={t[k]:g})")
        rows[k] = val
    return GridFunction(spec, rows)


def heaviside(spec: GridSpec, h_vec=1.0) -> GridFunction:
    """Samples of chi_{t>0} * h_vec, with chi(0) = 0 (paper convention)."""
    h_vec = np.atleast_1d(np.asarray(h_vec, dtype=complex))
    chi = (spec.times > 0).astype(float)
    return GridFunction(spec, chi[:, None] * h_vec[None, :])


def exp_weight(u: GridFunction, rho: float) -> GridFunction:
    """Multiply samples by e^{-rho t}: the isometry L2_rho -> L2."""
    w = np.exp(-rho * u.spec.times)
    return GridFunction(u.spec, w[:, None] * u.values)


def weighted_norm(u: GridFunction, rho: float) -> float:
    """Discrete L2_rho norm, left-rectangle rule."""
    w = np.exp(-2.0 * rho * u.spec.times)
    return float(np.sqrt(np.sum(w * np.sum(np.abs(u.values) ** 2, axis=1)) * u.spec.h))


def reflect(u: GridFunction) -> GridFunction:
    """sigma_{-1} u = (t -> u(-t)) on the mirrored grid."""
    spec = u.spec
    mirrored = GridSpec(t_min=-(spec.t_min + spec.n * spec.h) + spec.h, n=spec.n, h=spec.h)
    return GridFunction(mirrored, u.values[::-1].copy())


def mask_support(u: GridFunction, a: float, side: str) -> GridFunction:
    """Zero samples on one side of t = a; the node at t = a is kept."""
    t = u.spec.times
    if side == "before":
        keep = t <= a
    elif side == "after":
        keep = t >= a
    else:
        raise ValueError(f"side must be 'before' or 'after', got {side!r}")
    return GridFunction(u.spec, np.where(keep[:, None], u.values, 0.0))
