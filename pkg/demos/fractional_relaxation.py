"""Fractional relaxation: d^alpha y = -y, y(0) = 1, for a ladder of orders.

At alpha = 1 the solution is e^{-t}; at alpha = 1/2 it is the
Mittag-Leffler function E_{1/2}(-sqrt(t)) = e^t erfc(sqrt(t)), which
decays algebraically -- the hallmark of fractional-order memory.  The
solver never sees a closed form: every curve below is a Picard fixed
point computed spectrally.

Smaller orders need larger weights rho to buy contraction, and the
useful horizon of the raw samples shrinks like t ~ 30/rho (beyond it,
e^{rho t} amplifies double-precision floor noise); the orders shown
keep the whole table inside that horizon.
"""

import math

import numpy as np

from fraccalc import SolverConfig, linear_rhs, solve_caputo


def main():
    rhs = linear_rhs(-1.0)
    orders = (0.5, 0.75, 1.0)
    solutions = {}
    for alpha in orders:
        y, report = solve_caputo(rhs, [1.0], SolverConfig(alpha=alpha))
        print(f"alpha={alpha:4.2f}: rho={report.rho_used:g}, "
              f"{report.iterations} iterations, residual {report.residual:.1e}")
        solutions[alpha] = y

    spec = solutions[1.0].spec
    t = spec.times
    marks = [0.25, 0.5, 1.0, 2.0, 4.0]
    print()
    print("      t " + "".join(f"  alpha={a:4.2f}" for a in orders)
          + "   E_1/2 ref    e^-t ref")
    for tm in marks:
        k = int(np.argmin(np.abs(t - tm)))
        row = f"{t[k]:7.3f} "
        for a in orders:
            row += f"  {solutions[a].values[k, 0].real:10.6f}"
        ml_half = math.exp(t[k]) * math.erfc(math.sqrt(t[k]))
        row += f"  {ml_half:10.6f}  {np.exp(-t[k]):10.6f}"
        print(row)

    sel = (t >= 0) & (t <= 4)
    err1 = np.max(np.abs(solutions[1.0].values[sel, 0] - np.exp(-t[sel])))
    ref_half = np.array([math.exp(v) * math.erfc(math.sqrt(v)) for v in t[sel]])
    err_half = np.max(np.abs(solutions[0.5].values[sel, 0] - ref_half))
    print(f"\nmax deviation on [0, 4]:  alpha=1 vs e^-t: {err1:.2e};  "
          f"alpha=1/2 vs e^t erfc(sqrt t): {err_half:.2e}")


if __name__ == "__main__":
    main()
