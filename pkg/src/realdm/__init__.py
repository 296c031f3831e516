"""Real density matrices: a linear bijection between Hermitian density
matrices and real matrices of Pauli-product expectation values, with
observables, dynamics and channels carried out in the real domain."""

from .channels import (
    IsingFactors,
    RelaxationSpec,
    apply_rotation,
    composite_rate_matrix,
    hadamard_exp,
    ising_apply,
    ising_factors,
    relax_correlated_2q,
    relax_uncorrelated,
    rot_opsum,
    rot_z_hadamard,
)
from .dynamics import (
    RotationGenerator,
    biaxial_phase,
    commutator_real_1q,
    commutator_real_biaxial,
    double_commutator_1q,
    double_commutator_biaxial,
    evolve_1q,
    evolve_biaxial,
    rotation_superop,
    s_superop,
)
from .observables import ObservablePair, expect, partial_trace, purity
from .tensor_core import (
    BasisLabel,
    DomainError,
    basis_matrix,
    choi_reshuffle,
    commutation_matrix_22,
    diag_sandwich,
    elementary,
    hadamard,
    kron,
    pauli,
    pauli_product,
    unvec,
    vec,
)
from .xform import (
    OperatorSum,
    Superop,
    ValidationError,
    opsum_choi,
    opsum_from_choi,
    q_power,
    real_superop_to_choi_pauli,
    superop_to_hermitian,
    superop_to_real,
    to_hermitian,
    to_real,
)

__version__ = "0.1.0"
