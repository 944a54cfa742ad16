"""Two implementations of one operator, built not to share bugs.

The fractional integral is computed twice: spectrally (multiply the
Fourier-Laplace spectrum by (i xi + rho)^{-alpha}) and in the time
domain (O(n^2) product integration of the Riemann-Liouville kernel).
The second path never reads rho, witnessing that the weight is a
solver parameter and not part of the operator.
"""

import time

import numpy as np

from fraccalc import GridFunction, frac_integral, rl_convolution, solver_grid


def main():
    spec = solver_grid()
    t = spec.times

    # a slowly varying random field under a wide compactly supported bump
    rng = np.random.default_rng(7)
    x = (t - 12.0) / 10.0
    env = np.zeros_like(t)
    m = np.abs(x) < 1
    env[m] = np.exp(1.0 - 1.0 / (1.0 - x[m] ** 2))
    field = 1.0 + 0.15 * np.cos(0.3 * t + rng.uniform(0, 6)) \
        + 0.1 * np.cos(0.15 * t + rng.uniform(0, 6))
    u = GridFunction(spec, env * field)

    print("relative L2_rho distance, spectral vs time-domain oracle:")
    for alpha in (0.3, 0.7, 1.5):
        for rho in (1.0, 2.0):
            v1 = frac_integral(u, rho, alpha).values[:, 0]
            v2 = rl_convolution(u, alpha).values[:, 0]
            w = np.exp(-2.0 * rho * t)
            dist = np.sqrt(np.sum(w * np.abs(v1 - v2) ** 2)
                           / np.sum(w * np.abs(v2) ** 2))
            print(f"  alpha={alpha:3.1f} rho={rho:g}: {dist:.2e}")

    print("\nscaling (median of 5 runs):")
    prev = None
    for n in (1024, 2048, 4096, 8192):
        sp = solver_grid(n, 1.0 / 64)
        un = GridFunction(sp, np.random.default_rng(0).standard_normal(n))
        ts, to = [], []
        for _ in range(5):
            t0 = time.perf_counter(); frac_integral(un, 1.0, 0.5)
            ts.append(time.perf_counter() - t0)
            t0 = time.perf_counter(); rl_convolution(un, 0.5)
            to.append(time.perf_counter() - t0)
        cur = (float(np.median(ts)), float(np.median(to)))
        line = f"  n={n:6d}: spectral {cur[0] * 1e3:7.2f} ms, oracle {cur[1] * 1e3:8.2f} ms"
        if prev:
            line += f"   (x{cur[0] / prev[0]:.1f}, x{cur[1] / prev[1]:.1f} per doubling)"
        print(line)
        prev = cur


if __name__ == "__main__":
    main()
