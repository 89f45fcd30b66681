"""Grid solver for densities of jump diffusions driven by symmetric
alpha-stable noise, with absorbing or whole-line auxiliary conditions.

The public surface is re-exported here; modules group as

* :mod:`levyfp.specfun` -- scalar special functions and the step bound
* :mod:`levyfp.core` -- parameter/grid/field containers and seeds
* :mod:`levyfp.toeplitz` -- circulant-embedding symmetric Toeplitz matvec
* :mod:`levyfp.operators` -- discrete generator (jump sum, WENO advection)
* :mod:`levyfp.stepper` -- explicit time integrators and step selection
* :mod:`levyfp.verify` -- references, error reports, refinement drivers
* :mod:`levyfp.montecarlo` -- particle-ensemble cross checks
* :mod:`levyfp.cli` -- scenario configs and batch suites
"""

__version__ = "0.1.0"

from .core import (
    Absorbing,
    CauchySeed,
    DensityField,
    DriftField,
    GaussianNormalized,
    GaussianPaper,
    Grid,
    LevyParams,
    Natural,
    Uniform,
    build_grid,
    sample_initial,
)
from .montecarlo import (
    PathEnsemble,
    cms_sample,
    empirical_density,
    ensemble_to_csv,
    ks_distance,
    simulate_terminal,
)
from .operators import (
    OperatorWorkspace,
    advection_term,
    corrected_diffusion,
    exterior_decay,
    nonlocal_kernel_column,
    nonlocal_sum,
    prepare,
    rhs_absorbing,
    rhs_natural,
    split_fluxes,
    weno3_minus,
    weno3_plus,
)
from .specfun import StabilityIndex, c_alpha, mp_threshold, riemann_zeta
from .stepper import (
    StepControl,
    euler_step,
    evolve,
    rk3_step,
    select_dt,
    select_dt_composite,
)
from .toeplitz import PreparedToeplitz, SymmetricToeplitzKernel
from .verify import (
    ErrorReport,
    cauchy_exact,
    cauchy_run,
    error_report,
    mass_integral,
    mass_sweep,
    observed_order,
    refinement_table,
    richardson_domain,
    richardson_refinement_table,
    tail_slope,
    tail_slope_run,
)

__all__ = [
    "__version__",
    "Absorbing",
    "CauchySeed",
    "DensityField",
    "DriftField",
    "GaussianNormalized",
    "GaussianPaper",
    "Grid",
    "LevyParams",
    "Natural",
    "Uniform",
    "build_grid",
    "sample_initial",
    "PathEnsemble",
    "cms_sample",
    "empirical_density",
    "ensemble_to_csv",
    "ks_distance",
    "simulate_terminal",
    "OperatorWorkspace",
    "advection_term",
    "corrected_diffusion",
    "exterior_decay",
    "nonlocal_kernel_column",
    "nonlocal_sum",
    "prepare",
    "rhs_absorbing",
    "rhs_natural",
    "split_fluxes",
    "weno3_minus",
    "weno3_plus",
    "StabilityIndex",
    "c_alpha",
    "mp_threshold",
    "riemann_zeta",
    "StepControl",
    "euler_step",
    "evolve",
    "rk3_step",
    "select_dt",
    "select_dt_composite",
    "PreparedToeplitz",
    "SymmetricToeplitzKernel",
    "ErrorReport",
    "cauchy_exact",
    "cauchy_run",
    "error_report",
    "mass_integral",
    "mass_sweep",
    "observed_order",
    "refinement_table",
    "richardson_domain",
    "richardson_refinement_table",
    "tail_slope",
    "tail_slope_run",
]
