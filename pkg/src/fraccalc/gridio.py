"""CSV serialization for grid and spectrum functions.

Fixed %.17g formatting, no locale: identical data produces
byte-identical files.
"""

from __future__ import annotations

import numpy as np

from .spectral import SpectrumFunction, frequencies
from .timegrid import GridFunction, GridSpec

__all__ = ["write_gridfunction", "read_gridfunction", "write_spectrum"]


def _header(prefix: str, dim: int) -> str:
    cols = [prefix] + [f"{p}_{j}" for j in range(dim) for p in ("re", "im")]
    return ",".join(cols)


def _rows(axis: np.ndarray, values: np.ndarray) -> str:
    lines = []
    for k in range(values.shape[0]):
        parts = [f"{axis[k]:.17g}"]
        for j in range(values.shape[1]):
            parts.append(f"{values[k, j].real:.17g}")
            parts.append(f"{values[k, j].imag:.17g}")
        lines.append(",".join(parts))
    return "\n".join(lines) + "\n"


def write_gridfunction(path, u: GridFunction):
    with open(path, "w", newline="\n") as fh:
        fh.write(_header("t", u.dim) + "\n")
        fh.write(_rows(u.spec.times, u.values))


def write_spectrum(path, U: SpectrumFunction):
    with open(path, "w", newline="\n") as fh:
        fh.write(_header("xi", U.dim) + "\n")
        fh.write(_rows(frequencies(U.spec), U.coeffs))


def read_gridfunction(path, spec: GridSpec | None = None) -> GridFunction:
    """Read a GridFunction CSV; infers the grid if none is given."""
    data = np.genfromtxt(path, delimiter=",", skip_header=1)
    data = np.atleast_2d(data)
    t = data[:, 0]
    dim = (data.shape[1] - 1) // 2
    values = data[:, 1::2] + 1j * data[:, 2::2]
    if spec is None:
        h = float(t[1] - t[0])
        spec = GridSpec(t_min=float(t[0]), n=len(t), h=h)
    if not np.allclose(spec.times, t, atol=1e-9 * spec.h):
        raise ValueError(f"CSV nodes do not match the requested grid: {path}")
    return GridFunction(spec, values)
