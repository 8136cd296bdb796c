"""Qubit Bloch-vector channels and their complete-positivity structure.

The package models two-level systems as Bloch vectors, evolves them under
Markovian and memory-kernel noise, decides positivity versus complete
positivity of the resulting maps (inequalities, spectral test, Kraus
constructions), and checks entanglement survival of a noisy Bell pair.  A
Monte Carlo trajectory engine cross-validates the analytic channels.
"""

from .bloch import (
    AffineBlochMap,
    Ellipsoid,
    PositivityResult,
    apply_map,
    as_bloch_vector,
    bloch_matrix,
    from_density,
    image_ellipsoid,
    is_positive_map,
    superoperator_matrix,
    to_density,
)
from .cp import (
    CpVerdict,
    KrausSet,
    bloch_inequalities,
    bloch_inequality_lhs,
    choi_matrix,
    choi_test,
    kraus_from_choi,
    kraus_weights,
    lifetime_inequalities,
    tetrahedron_sample,
    unital_kraus,
    verify_kraus,
)
from .errors import (
    DefectiveGeneratorError,
    InputError,
    NotCompletelyPositiveError,
    UnphysicalStateError,
)
from .linalg import hermitian_eigenvalues4, kron, pauli
from .markov import (
    BlochParams,
    DampingBasis,
    LindbladGenerator,
    bloch_rhs,
    damping_basis,
    evolve_by_damping_basis,
    evolve_state,
    integrate_bloch,
    lindblad_apply,
    preset_rates,
    semigroup_check,
)
from .nonmarkov import (
    RtsParams,
    RtsSolution,
    amplitude_for_rate,
    regime,
    rts_lambda,
    rts_map,
    rts_solution,
    rts_solve_ode,
    white_noise_limit,
    white_noise_rate,
)
from .separability import (
    bell_state,
    one_sided_channel,
    partial_transpose_b,
    peres_eigenvalues,
    peres_eigenvalues_numeric,
    separability_times,
)
from .stochastic import (
    EnsembleResult,
    GaussianWhiteNoise,
    TelegraphNoise,
    analytic_mean,
    ensemble_average,
    simulate_trajectory,
    telegraph_sampler,
)
from .tolerances import TOL
from .trace import ChannelTrace

__version__ = "0.1.0"
