"""Exact dephasing of Hermitian, PT-symmetric and anti-PT-symmetric qubits in a bosonic bath."""

from .bath_integrals import (
    BathIntegralCache,
    QuadratureConfig,
    dgamma_dbeta,
    gamma,
    omega1,
    omega2,
    omega_phase_hermitian,
    spectral_density,
)
from .bloch import (
    BlochState,
    TrajectoryParams,
    angular_velocity,
    axis_distance,
    linear_velocity,
    normalized_angular_velocity,
    phase,
    spin_vector,
)
from .dynamics import (
    DensityMatrix2,
    DephasingFactors,
    InitialState,
    coherence_factor,
    decoherence_function,
    dephasing_factors,
    phase_function,
    reduced_density_matrix,
    time_grid,
)
from .errors import (
    AptQubitError,
    ConditioningFailure,
    DegenerateGap,
    DomainError,
    EmptyCurve,
    NormalizationCollapse,
    NumericalFailure,
    QuadratureFailure,
    TruncationError,
)
from .info_measures import (
    FisherSummary,
    fisher_beta,
    fisher_omega0,
    fisher_summary,
    entropy_deficit,
    kl_divergence,
    renyi_entropy,
    von_neumann_entropy,
)
from .model import BathSpec, QubitSpec, SpectralInfo, SymmetryClass, omega0, spectral_info
from .presets import PRESETS, get_preset

__version__ = "0.1.0"
