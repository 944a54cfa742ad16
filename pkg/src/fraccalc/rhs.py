"""Right-hand sides f(t,y), the Nemytskii operator, and weight selection.

An RhsSpec carries a pointwise map f together with its Lipschitz
constant c (in y, uniform in t) and a weight floor rho0.  Evaluation is
causally cut off: f~(t, y) = 0 for t <= 0.  The induced Nemytskii
operator u -> f~(., u(.) + y0) is Lipschitz on every L2_rho with the
same constant, and contraction of d^{-alpha} F is bought by raising rho.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .timegrid import GridFunction

__all__ = [
    "RhsSpec",
    "nemytskii",
    "contraction_rho",
    "linear_rhs",
    "logistic_rhs",
    "forced_rhs",
]


def _lipschitz_spot_check(f, c: float, dim: int, rng_seed: int = 7):
    rng = np.random.default_rng(rng_seed)
    for _ in range(32):
        t = float(rng.uniform(0.01, 8.0))
        y1 = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        y2 = y1 + rng.standard_normal(dim) * rng.uniform(1e-3, 2.0)
        d = np.linalg.norm(np.atleast_1d(f(t, y1)) - np.atleast_1d(f(t, y2)))
        if d > c * np.linalg.norm(y1 - y2) * (1.0 + 1e-9):
            raise ValueError(
                f"Lipschitz spot check failed at t={t:g}: |df|={d:g} > c|dy|"
            )


@dataclass(frozen=True)
class RhsSpec:
    """A pointwise right-hand side with Lipschitz metadata.

    f(t, y) maps (float, C^d) -> C^d and is only ever read for t > 0;
    the causal cutoff f~ vanishes at t <= 0.
    """

    f: Callable
    lipschitz_c: float
    rho0: float = 1.0
    dim: int = 1
    real_mode: bool = False
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.lipschitz_c < 0:
            raise ValueError("lipschitz_c must be >= 0")
        if not self.rho0 > 0:
            raise ValueError("rho0 must be > 0")
        _lipschitz_spot_check(self.f, self.lipschitz_c, self.dim)

    def eval_cut(self, t: float, y) -> np.ndarray:
        """f~(t, y): the causal zero-extension of f."""
        if t <= 0:
            return np.zeros(self.dim, dtype=complex)
        if self.real_mode:
            y = np.real(y)
        val = np.atleast_1d(np.asarray(self.f(t, y), dtype=complex))
        if not np.all(np.isfinite(val)):
            raise ValueError(f"rhs returned non-finite value at t={t:g}")
        return val


def nemytskii(rhs: RhsSpec, u: GridFunction, shift) -> GridFunction:
    """result[k] = f~(t_k, u[k] + shift)."""
    shift = np.atleast_1d(np.asarray(shift, dtype=complex))
    if u.dim != rhs.dim or shift.size != rhs.dim:
        raise ValueError("dimension mismatch between rhs, input, and shift")
    t = u.spec.times
    out = np.zeros_like(u.values)
    for k in np.nonzero(t > 0)[0]:
        out[k] = rhs.eval_cut(t[k], u.values[k] + shift)
    return GridFunction(u.spec, out)


def contraction_rho(
    c: float, alpha: float, gamma: float, rho0: float, q_target: float = 0.5
) -> float:
    """Smallest tabulated weight with c rho^{gamma-alpha} <= q_target.

    rho = max(rho0, (c/q_target)^{1/(alpha-gamma)}); the Lipschitz
    factor of d^{-alpha} F on the chain is c rho^{gamma-alpha}.
    """
    if not alpha > 0:
        raise ValueError("alpha must be > 0")
    if not (0.0 <= gamma < alpha):
        raise ValueError(
            f"no contraction mechanism for gamma={gamma:g} >= alpha={alpha:g}"
        )
    if not (0.0 < q_target < 1.0):
        raise ValueError("q_target must be in (0,1)")
    if c < 0:
        raise ValueError("c must be >= 0")
    if c == 0.0:
        return float(rho0)
    return float(max(rho0, (c / q_target) ** (1.0 / (alpha - gamma))))


# ---------------------------------------------------------------------------
# Catalogue entries (the CLI builds RhsSpec from these by name).
# ---------------------------------------------------------------------------


def linear_rhs(lam: complex, rho0: float = 1.0, dim: int = 1) -> RhsSpec:
    """f(t, y) = lam * y, Lipschitz constant |lam|."""
    lam = complex(lam)
    return RhsSpec(
        f=lambda t, y: lam * np.asarray(y),
        lipschitz_c=abs(lam),
        rho0=rho0,
        dim=dim,
        label=f"linear(lambda={lam:g})",
    )


def logistic_rhs(lam: float, clip: float = 10.0, rho0: float = 1.0) -> RhsSpec:
    """f(t, y) = lam y (1 - y) with y clipped to [-clip, clip].

    The clip box makes f globally Lipschitz with constant
    |lam| (1 + 2 clip); applied to Re y (the paper's real-valued remark).
    """
    lam, clip = float(lam), float(clip)

    def f(t, y):
        yr = np.clip(np.real(np.asarray(y)), -clip, clip)
        return lam * yr * (1.0 - yr) + 0j

    return RhsSpec(
        f=f,
        lipschitz_c=abs(lam) * (1.0 + 2.0 * clip),
        rho0=rho0,
        dim=1,
        real_mode=True,
        label=f"logistic(lambda={lam:g}, clip={clip:g})",
    )


def forced_rhs(
    lam: complex, forcing: Callable[[float], complex], rho0: float = 1.0
) -> RhsSpec:
    """f(t, y) = lam y + a(t), Lipschitz constant |lam|."""
    lam = complex(lam)
    return RhsSpec(
        f=lambda t, y: lam * np.asarray(y) + forcing(float(t)),
        lipschitz_c=abs(lam),
        rho0=rho0,
        dim=1,
        label=f"forced(lambda={lam:g})",
    )
