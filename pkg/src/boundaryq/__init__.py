"""Simplicial boundary operators as Jordan-Wigner fermions, compiled to exact circuits.

Qubit 0 is the rightmost tensor factor and the least-significant bit of every
basis-state index, throughout the package.
"""
from ._config import ResourceLimitError, dense_limit
from .circuit import Circuit, Gate, compile_pauli_rotation, depth_and_counts, emit_text, parse_text, unitary_of
from .estimation import (
    ScalingReport,
    analytic_estimate,
    exact_boundary_expectation,
    scaling_experiment,
    trotter_circuit,
    trotter_estimate,
)
from .fermionic import full_boundary_fermionic, full_boundary_recurrence, hermitian_boundary
from .pauli import (
    OperatorSum,
    PauliString,
    anticommutes,
    jw_annihilation,
    jw_creation,
    multiply,
    to_dense,
    to_sparse,
)
from .simplicial import (
    ChainVector,
    SimplexState,
    apply_boundary,
    full_boundary_oracle,
    projector,
    restricted_boundary,
)
from .simulator import ShotConfig, StateVector, expectation, hadamard_test, run, sample_pauli
from .unitary_partitioning import (
    RotationCascade,
    analytic_boundary_circuit,
    build_cascade,
    conjugate_check,
    evolution_circuit,
    restricted_from_hermitian,
)

__version__ = "0.1.0"
