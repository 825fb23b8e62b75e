"""Closed-form Fokker-Planck toolkit.

Profile laws for the confined porous-medium / fast-diffusion flow, exact
flow divergences (transport, entropy, production), high-dimensional scans,
seeded exact samplers, and a reference finite-volume solver.
"""

from ._core import (
    AsymptoticMode,
    Cdf1D,
    ConstraintError,
    ConvergenceError,
    CutoffScanRow,
    DivergenceReport,
    DomainError,
    Error,
    EvolveReport,
    FlowState,
    GridDensity,
    GridSpec,
    InfiniteMomentError,
    InsufficientDataError,
    Metric,
    ModelParams,
    PreconditionError,
    Profile,
    Regime,
    ResolutionError,
    SampleCloud,
    ScheduleSpec,
    Side,
    StabilityError,
    TrendFit,
    TrendVerdict,
    UnsupportedSizeError,
    asymptotic_targets,
    critical_time,
    density_at,
    discrete_entropy,
    distances_closed_form,
    entropy_flow,
    entropy_quadrature,
    evolve,
    fisher_flow,
    fisher_quadrature,
    flow_cdf_1d,
    flow_state,
    front_radius,
    grid_mass,
    init_from_closed_form,
    l1_error_vs_closed_form,
    lm_norm,
    moment,
    moment_quadrature,
    ot_1d_quantile,
    ot_assignment,
    params_from_alpha,
    params_from_m,
    sample_barenblatt,
    sample_flow,
    scale_factor,
    scan,
    self_similar_density,
    solution_density,
    stationary_cdf_1d,
    sup_distance,
    support_radius,
    time_rescaling,
    time_rescaling_inverse,
    trend_fit,
    w2_sq_flow,
)

__version__ = "1.0.0"

__all__ = [name for name in dir() if not name.startswith("_")]
