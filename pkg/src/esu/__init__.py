"""Semi-classical Einstein equations on the Einstein static universe.

Mode sums, Hadamard renormalisation, the classification of symmetric
solutions, and the entropy-minimising solution for a scalar field on
R x S^3.
"""
from .exceptions import (
    DomainError,
    ESUError,
    InvalidParametersError,
    ModeInKernelError,
    NoSolutionError,
    SingularRenormalizationError,
    SingularSupportError,
    SolverFailureError,
)
from .harmonics import (
    SphereDegree,
    eigenspace_dim,
    gegenbauer,
    gegenbauer_table,
    laplacian_eigenvalue,
    projection_kernel,
    sphere_volume,
)
from .renormalization import (
    EffectiveConstants,
    effective_constants,
    hadamard_parametrix,
    hadamard_parametrix_series,
    hadamard_source_series,
    renormalized_energy_pressure,
    synge_sigma,
)
from .semiclassical import (
    Classification,
    SemiclassicalTargets,
    SolutionSet,
    classify,
    construct_two_mode,
    minimal_n_high,
    scale_transform,
    targets,
    verify_solution,
)
from .series import SeriesValue, ground_moments, x1, x2
from .spectral import (
    CurvatureData,
    ModelParams,
    RenormConstants,
    coupling_c,
    curvature,
    load_params,
    mode_frequency,
    ricci_scalar,
)
from .states import (
    SymmetricState,
    bose_coefficients,
    energy_pressure_reg,
    energy_pressure_ren,
    kms_coefficient,
    mode_table,
    moments,
    regularized_coincidence,
    two_point,
)
from .thermodynamics import (
    MinimizerResult,
    constraint_sums,
    kms_temperature_solve,
    occupation_spectrum,
    solve_entropy_minimizer,
    von_neumann_entropy,
)

__version__ = "0.1.0"
