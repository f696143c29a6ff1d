"""Pseudospectral solver for the periodic NLS equation with singular potentials."""

from .analysis import (
    AdmissiblePair,
    ErrorSample,
    OrderFit,
    fit_loglog,
    fit_order,
    is_admissible,
    lp_norm,
    sobolev_norm,
    spacetime_norm,
)
from .errors import ConfigurationError, InstabilityError, UsageError
from .harness import (
    AcceptanceBand,
    ErrorReport,
    ExperimentConfig,
    default_sweep,
    export_report,
    load_config,
    preset,
    preset_names,
    read_snapshot,
    run_convergence,
    write_snapshot,
)
from .filters import (
    SHARP,
    SMOOTH,
    BernsteinReport,
    CutoffProfile,
    ProfileKind,
    ProjectionKind,
    bernstein_check,
    cutoff_frequency,
    dyadic_projection,
    dyadic_scales,
    lowpass_filter,
)
from .integrator import (
    ExactSoliton,
    FineStep,
    SchrodingerProblem,
    StepperState,
    Trajectory,
    ewi_step,
    filtered_propagator,
    init_state,
    reference_solution,
    run,
    soliton_initial,
    soliton_solution,
    step_count,
)
from .potentials import (
    PotentialKind,
    PotentialSpec,
    Rate,
    RegularityClass,
    delta_series_potential,
    gaussian_well,
    power_law_potential,
    predicted_order,
    regularity_loss,
    sampled_potential,
    sigma_window,
)
from .selftest import CheckResult, SelftestReport, run_selftest
from .spectral import (
    Direction,
    Field,
    Multiplier,
    Space,
    SpectralGrid,
    apply_multiplier,
    as_fourier,
    as_physical,
    coefficients_of,
    gradient_weight,
    laplacian_propagator,
    make_grid,
    phi1,
    sobolev_weight,
    synthesize,
    transform,
)

__version__ = "0.1.0"
