"""Spectral fractional calculus on exponentially weighted spaces.

A Fourier-Laplace functional calculus for the fractional derivative
d^alpha on L2_rho(R), time-domain product-integration oracles,
contraction solvers for Caputo and Riemann-Liouville initial value
problems, and machine checks of the structural theorems (unitarity,
support preservation, causality, rho-independence).
"""

from .fracops import (
    SobolevElement,
    dirac_spectrum,
    frac_derivative,
    frac_integral,
    g_kernel,
    heaviside,
    sobolev_norm,
    zpow_symbol,
)
from .gammafn import gamma
from .quadrature import kernel_weights, rl_convolution, verify_laplace_symbol
from .rhs import (
    RhsSpec,
    contraction_rho,
    forced_rhs,
    linear_rhs,
    logistic_rhs,
    nemytskii,
)
from .solver import (
    NonContractiveError,
    SolveReport,
    SolverConfig,
    caputo_residual,
    picard_solve,
    solve_caputo,
    solve_riemann_liouville,
)
from .spectral import (
    MultiplierSymbol,
    SpectrumFunction,
    apply_symbol,
    fl_inverse,
    fl_transform,
    operator_norm,
)
from .timegrid import (
    GridFunction,
    GridSpec,
    exp_weight,
    mask_support,
    reflect,
    sample,
    solver_grid,
    weighted_norm,
)
from .verify import (
    check_causality,
    check_chain_isometry,
    check_reflection,
    check_rho_independence,
    check_support_preservation,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
