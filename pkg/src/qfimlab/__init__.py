"""Noisy parametrized quantum circuits, their quantum Fisher information
matrices, and dynamical Lie algebras, on dense density matrices.

The package is organized as:

- ``linalg``: dense complex kernel (Kronecker products, Hermitian
  eigendecompositions, matrix exponentials, partial traces).
- ``channels``: unital Pauli channels, bit-flip, local/global depolarizing
  noise, composition, superoperator/Choi materialization, CPTP checks.
- ``circuits``: circuit assembly, noisy evolution, exact analytic state
  derivatives, the single-qubit toy model and the Ising-ansatz constructors.
- ``dla``: Lie-closure computation and algebra dimensions.
- ``qfim``: pure/mixed quantum Fisher information, ranks and capacity
  counts, classical Fisher information, distances and relative entropy.
- ``experiments``: JSON-configured, seeded experiment harness with CSV/JSON
  emission, plus the numerical verification suite (``verify``).
"""

from .channels import (
    Channel,
    CompositeChannel,
    CptpReport,
    GlobalDepolarizing,
    LocalDepolarizing,
    PauliChannel,
    PauliString,
    UnitaryChannel,
    bit_flip,
    choi_matrix,
    compose,
    decompose_local_depol,
    effective_global_depol,
    identity_channel,
    superoperator,
    verify_cptp,
)
from .circuits import (
    TOY_THETAS,
    NoisyCircuit,
    bloch_coords,
    build_circuit,
    derivative,
    derivative_fd,
    evolve,
    evolve_statevector,
    evolve_with_derivatives,
    hva_tfim,
    hva_tfim_generators,
    loss_linear,
    plus_state_density,
    statevector_derivatives,
    toy_model,
)
from .dla import LieBasis, dla_dimension, lie_closure
from .exceptions import (
    CapExceededError,
    ConfigError,
    DegenerateDistributionError,
    DimensionMismatchError,
    NotHermitianError,
    QfimlabError,
    TooLargeError,
)
from .linalg import (
    EigenDecomposition,
    check_density_matrix,
    dag,
    frobenius_inner,
    herm_exp,
    hermitian_eig,
    is_hermitian,
    is_unitary,
    kron,
    partial_trace,
    purity,
)
from .qfim import (
    QfimReport,
    bures_distance,
    classical_fim,
    effective_dim_d1,
    noisy_qfim_closed_form_global_depol,
    qfim_mixed,
    qfim_of_circuit,
    qfim_pure,
    relative_entropy_to_mixed,
    report_from_matrix,
    trace_distance,
    uhlmann_fidelity,
)
from .rand import (
    random_density_matrix,
    random_hermitian,
    random_statevector,
    random_unitary,
    rng_from_seed,
)

__version__ = "0.1.0"
