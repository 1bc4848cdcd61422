"""densecode: dense-coding capacity and steerability of mixed states.

The library builds the Werner and isotropic state families, evaluates
von Neumann entropies and the dense-coding capacity
chi = log2(dA) + S(rho_B) - S(rho_AB), classifies steerability, locates
the critical parameters where the families become dense-codeable, and
simulates the two-party and GHZ-controlled dense-coding protocols with
exact density-matrix algebra.
"""

from .linalg import (
    ConvergenceError,
    EigenResult,
    dagger,
    eig_hermitian,
    frobenius_norm,
    kron,
    matmul,
    partial_trace,
    trace,
)
from .measures import (
    WERNER_UNSTEERABLE_POINT,
    CapacityReport,
    SteerVerdict,
    concurrence,
    dense_coding_capacity,
    is_steerable,
    von_neumann_entropy,
)
from .protocols import (
    ControlBasis,
    ProtocolOutcome,
    controlled_dense_coding_run,
    mixed_basis_decode_table,
    superdense_run,
)
from .states import (
    DensityOperator,
    StateFamily,
    bell,
    ghz,
    isotropic,
    isotropic_family,
    mixed_basis,
    pure_density,
    werner,
    werner_family,
)
from .thresholds import (
    NoThresholdError,
    RegionMap,
    Segment,
    ThresholdResult,
    build_region_map,
    find_dense_coding_threshold,
    harmonic_number,
    steerability_threshold,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityReport",
    "ControlBasis",
    "ConvergenceError",
    "DensityOperator",
    "EigenResult",
    "NoThresholdError",
    "ProtocolOutcome",
    "RegionMap",
    "Segment",
    "StateFamily",
    "SteerVerdict",
    "ThresholdResult",
    "WERNER_UNSTEERABLE_POINT",
    "bell",
    "build_region_map",
    "concurrence",
    "controlled_dense_coding_run",
    "dagger",
    "dense_coding_capacity",
    "eig_hermitian",
    "find_dense_coding_threshold",
    "frobenius_norm",
    "ghz",
    "harmonic_number",
    "is_steerable",
    "isotropic",
    "isotropic_family",
    "kron",
    "matmul",
    "mixed_basis",
    "mixed_basis_decode_table",
    "partial_trace",
    "pure_density",
    "steerability_threshold",
    "superdense_run",
    "trace",
    "von_neumann_entropy",
    "werner",
    "werner_family",
]
