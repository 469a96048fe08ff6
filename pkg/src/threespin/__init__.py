"""Thermal pairwise entanglement of a three-qubit XX chain with a three-spin term.

The Hamiltonian is

    H = J sum_{i=1,2} (X_i X_{i+1} + Y_i Y_{i+1}) + h sum_i Z_i + k (X_1 Z_2 X_3 + Y_1 Z_2 Y_3)

Closed-form eigenstates and X-state weights live next to a fully numeric
route (Jacobi diagonalisation, Gibbs state, partial trace, Wootters
concurrence), and each is used to check the other.
"""
from .analysis import (
    BootHeights,
    DipResult,
    MutationScan,
    PhaseSegment,
    ScannedDip,
    boot_heights,
    dip,
    dip_curve,
    ground_segments,
    mutation_scan,
    scan_dip,
    sweep,
)
from .errors import (
    BadIndex,
    BadPair,
    ComplexRoots,
    InvalidState,
    NoConvergence,
    NonPositiveTemperature,
    NotSymmetric,
    PathMismatch,
    ThreeSpinError,
    ZeroCoupling,
)
from .linalg import (
    SpectralDecomposition,
    eigenvalues_4x4,
    eigh_symmetric,
    kron,
    partial_trace,
    wootters_concurrence,
)
from .model import (
    AnalyticLevel,
    AnalyticSpectrum,
    ModelParams,
    analytic_spectrum,
    build_hamiltonian,
    level_pair_concurrence,
)
from .thermal import (
    ThermalPoint,
    XStateParams,
    concurrence_from_xstate,
    degenerate_ground_mixture,
    gibbs_state,
    reduced_pair_state,
    thermal_concurrence,
    xstate_closed_form,
    zero_T_concurrence,
)

__version__ = "0.1.0"
