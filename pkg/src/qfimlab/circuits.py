"""Parametrized circuits with interleaved noise, and their exact derivatives.

A circuit is a sequence of gates ``exp(-i theta_m H_m)`` drawn from a fixed
generator set, with a noise-channel slot before each gate and one final slot
after the last gate (``M + 1`` slots for ``M`` gates; slot ``m`` acts before
gate ``m``). ``None`` in a slot means "no noise" and is skipped, so a circuit
with all-``None`` slots runs the identical operation sequence as a noiseless
one.

Derivatives of the output state are computed analytically: differentiating
gate ``i`` inserts the commutator ``-i [H_i, .]`` right after that gate, and
the result is pushed through the remaining (linear) gates and channels. The
central finite difference ``derivative_fd`` exists as an independent test
oracle only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import Channel
from .exceptions import DimensionMismatchError
from .linalg import (
    KET_PLUS,
    TAU_HERM,
    X,
    Y,
    Z,
    EigenDecomposition,
    check_hermitian,
    dag,
    embed_single_qubit,
    herm_exp_from_eig,
    hermitian_eig,
    kron,
)


@dataclass(frozen=True, eq=False)
class NoisyCircuit:
    """Gate list over a generator set, with M+1 noise slots.

    Fields:
        n_qubits: register size.
        generators: Hermitian traceless matrices (the gate generator set).
        layers: generator index for each of the M gates, in application order.
        noise_slots: length M+1; ``noise_slots[m]`` acts before gate ``m``
            (0-based) and ``noise_slots[M]`` acts after the last gate.
            Entries are :class:`~qfimlab.channels.Channel` or ``None``.
    """

    n_qubits: int
    generators: tuple[np.ndarray, ...]
    layers: tuple[int, ...]
    noise_slots: tuple[Channel | None, ...]
    _gen_eigs: tuple[EigenDecomposition, ...]

    @property
    def n_params(self) -> int:
        return len(self.layers)

    @property
    def dim(self) -> int:
        return 2**self.n_qubits

    def with_noise(self, slots) -> "NoisyCircuit":
        """Copy of this circuit with the given noise slots (length M+1)."""
        return build_circuit(self.n_qubits, self.generators, self.layers, slots)

    def with_uniform_noise(self, channel: Channel | None) -> "NoisyCircuit":
        """Copy with the same channel in every one of the M+1 slots."""
        return self.with_noise([channel] * (self.n_params + 1))


def build_circuit(n_qubits, generators, layers, noise_slots=None) -> NoisyCircuit:
    """Validate and assemble a :class:`NoisyCircuit`.

    Generators must be Hermitian and traceless within 1e-9; noise slots must
    match the register size and have length M+1.
    """
    d = 2**n_qubits
    gens = tuple(np.asarray(g, dtype=complex) for g in generators)
    for k, g in enumerate(gens):
        if g.shape != (d, d):
            raise DimensionMismatchError(f"generator {k} has shape {g.shape}, expected {(d, d)}")
        check_hermitian(g, TAU_HERM, f"generator {k}")
        if abs(np.trace(g)) > 1e-9:
            raise ValueError(f"generator {k} has trace {np.trace(g):.3e}, expected traceless")
    layers = tuple(int(i) for i in layers)
    if any(not 0 <= i < len(gens) for i in layers):
        raise ValueError(f"layer indices {layers} outside generator set of size {len(gens)}")
    m = len(layers)
    if noise_slots is None:
        slots: tuple[Channel | None, ...] = (None,) * (m + 1)
    else:
        slots = tuple(noise_slots)
        if len(slots) != m + 1:
            raise ValueError(f"expected {m + 1} noise slots for {m} gates, got {len(slots)}")
        for s in slots:
            if s is not None and s.n_qubits != n_qubits:
                raise DimensionMismatchError(
                    f"noise channel on {s.n_qubits} qubits in a {n_qubits}-qubit circuit"
                )
    eigs = tuple(hermitian_eig(g) for g in gens)
    return NoisyCircuit(n_qubits, gens, layers, slots, eigs)


def _check_args(circuit: NoisyCircuit, theta: np.ndarray, rho: np.ndarray) -> np.ndarray:
    theta = np.asarray(theta, dtype=float)
    if theta.shape != (circuit.n_params,):
        raise ValueError(f"theta has shape {theta.shape}, expected ({circuit.n_params},)")
    if rho.shape != (circuit.dim, circuit.dim):
        raise DimensionMismatchError(
            f"state shape {rho.shape} does not match circuit dimension {circuit.dim}"
        )
    return theta


def _gate(circuit: NoisyCircuit, m: int, theta_m: float) -> np.ndarray:
    return herm_exp_from_eig(circuit._gen_eigs[circuit.layers[m]], theta_m)


def _apply_slot(circuit: NoisyCircuit, m: int, mat: np.ndarray) -> np.ndarray:
    ch = circuit.noise_slots[m]
    return mat if ch is None else ch.apply(mat)


def evolve(circuit: NoisyCircuit, theta: np.ndarray, rho: np.ndarray) -> np.ndarray:
    """Output state ``N_{M+1} ∘ C^M_{θ_M} ∘ N_M ∘ ... ∘ C^1_{θ_1} ∘ N_1 (rho)``."""
    theta = _check_args(circuit, theta, rho)
    out = rho
    for m in range(circuit.n_params):
        out = _apply_slot(circuit, m, out)
        u = _gate(circuit, m, theta[m])
        out = u @ out @ dag(u)
    return _apply_slot(circuit, circuit.n_params, out)


def derivative(circuit: NoisyCircuit, theta: np.ndarray, rho: np.ndarray, i: int) -> np.ndarray:
    """Exact ``d(output state)/d(theta_i)``: Hermitian, traceless."""
    if not 0 <= i < circuit.n_params:
        raise IndexError(f"parameter index {i} out of range for M={circuit.n_params}")
    return evolve_with_derivatives(circuit, theta, rho, indices=[i])[1][0]


def evolve_with_derivatives(
    circuit: NoisyCircuit,
    theta: np.ndarray,
    rho: np.ndarray,
    indices=None,
) -> tuple[np.ndarray, list[np.ndarray]]:
    """Output state together with analytic derivatives for the given indices.

    One forward pass stores the state right after each gate; each derivative
    starts from the commutator inserted there and is propagated through the
    tail of the circuit. Defaults to all M derivatives.
    """
    theta = _check_args(circuit, theta, rho)
    m_tot = circuit.n_params
    if indices is None:
        indices = range(m_tot)
    indices = list(indices)

    after_gate: list[np.ndarray] = []
    out = rho
    gates: list[np.ndarray] = []
    for m in range(m_tot):
        out = _apply_slot(circuit, m, out)
        u = _gate(circuit, m, theta[m])
        gates.append(u)
        out = u @ out @ dag(u)
        after_gate.append(out)
    out = _apply_slot(circuit, m_tot, out)

    derivs: list[np.ndarray] = []
    for i in indices:
        if not 0 <= i < m_tot:
            raise IndexError(f"parameter index {i} out of range for M={m_tot}")
        h = circuit.generators[circuit.layers[i]]
        d = -1j * (h @ after_gate[i] - after_gate[i] @ h)
        for m in range(i + 1, m_tot):
            d = _apply_slot(circuit, m, d)
            d = gates[m] @ d @ dag(gates[m])
        d = _apply_slot(circuit, m_tot, d)
        derivs.append(d)
    return out, derivs


def derivative_fd(
    circuit: NoisyCircuit,
    theta: np.ndarray,
    rho: np.ndarray,
    i: int,
    h: float = 1e-5,
) -> np.ndarray:
    """Central finite difference ``(rho(theta + h e_i) - rho(theta - h e_i)) / 2h``."""
    if h <= 0:
        raise ValueError("finite-difference step must be positive")
    theta = np.asarray(theta, dtype=float)
    up = theta.copy()
    up[i] += h
    down = theta.copy()
    down[i] -= h
    return (evolve(circuit, up, rho) - evolve(circuit, down, rho)) / (2.0 * h)


def loss_linear(
    circuit: NoisyCircuit, theta: np.ndarray, rho: np.ndarray, obs: np.ndarray
) -> float:
    """Linear loss ``Tr[rho_out O]`` for a Hermitian observable ``O``."""
    check_hermitian(obs, TAU_HERM, "observable")
    out = evolve(circuit, theta, rho)
    return float(np.trace(out @ obs).real)


def bloch_coords(rho: np.ndarray) -> tuple[float, float, float]:
    """Single-qubit Bloch vector ``(Tr[rho X], Tr[rho Y], Tr[rho Z])``."""
    if rho.shape != (2, 2):
        raise DimensionMismatchError(f"Bloch coordinates need a 2x2 state, got {rho.shape}")
    x = float(np.trace(rho @ X).real)
    y = float(np.trace(rho @ Y).real)
    z = float(np.trace(rho @ Z).real)
    return x, y, z


# ---------------------------------------------------------------------------
# Built-in models
# ---------------------------------------------------------------------------


def toy_model() -> tuple[NoisyCircuit, np.ndarray]:
    """Single-qubit four-rotation circuit and its full-rank input state.

    Gates in application order are exp(-i th Z/2), exp(-i th X/2),
    exp(-i th Z/2), exp(-i th X/2); the input is 0.9 |+><+| + 0.1 I/2.
    Noise slots default to identity.
    """
    circuit = build_circuit(1, [Z / 2, X / 2], [0, 1, 0, 1])
    plus = np.outer(KET_PLUS, KET_PLUS.conj())
    rho = 0.9 * plus + 0.1 * np.eye(2) / 2
    return circuit, rho


# The three parameter points used throughout the single-qubit analysis.
TOY_THETAS = {
    "theta1": np.array([0.0, 0.0, 0.0, 0.0]),
    "theta2": np.array([np.pi / 2, 0.0, 0.0, 0.0]),
    "theta3": np.array([np.pi / 2, np.pi / 4, np.pi / 4, np.pi / 4]),
}


def hva_tfim_generators(n_qubits: int) -> tuple[np.ndarray, np.ndarray]:
    """Transverse-field Ising generators with periodic boundary.

    ``H0 = sum_i Z_i Z_{i+1}`` (indices mod n, so n = 2 double-counts the
    single bond) and ``H1 = sum_i X_i``.
    """
    if n_qubits < 2:
        raise ValueError("the Ising ansatz needs at least 2 qubits")
    h0 = np.zeros((2**n_qubits, 2**n_qubits), dtype=complex)
    for i in range(n_qubits):
        js = [i, (i + 1) % n_qubits]
        ops = [Z if q in js else np.eye(2) for q in range(n_qubits)]
        h0 += kron(*ops)
    h1 = sum(embed_single_qubit(X, i, n_qubits) for i in range(n_qubits))
    return h0, h1


def hva_tfim(n_qubits: int, n_layers: int) -> NoisyCircuit:
    """Alternating-operator ansatz: L repetitions of (H0 gate, H1 gate), M = 2L."""
    if n_layers < 1:
        raise ValueError("need at least one layer")
    h0, h1 = hva_tfim_generators(n_qubits)
    return build_circuit(n_qubits, [h0, h1], [0, 1] * n_layers)


def plus_state_density(n_qubits: int) -> np.ndarray:
    """``|+><+| ^ (x) n``, the default input for the Ising ansatz."""
    psi = kron(*([KET_PLUS.reshape(2, 1)] * n_qubits)).reshape(-1)
    return np.outer(psi, psi.conj())


def hva_parity_sector_generators(n_qubits: int) -> tuple[np.ndarray, np.ndarray]:
    """Ising-ansatz generators restricted to the parity-even half-space.

    Both generators commute with the spin-flip parity ``X^(x)n``, and the
    default input ``|+>^(x)n`` is a +1 parity eigenstate, so the circuit
    never leaves the 2^(n-1)-dimensional even sector. The Lie closure of
    these restricted generators is the algebra that actually moves the
    reference state; for even n its dimension is 3n/2, whereas the closure
    of the unrestricted matrices is larger (it also counts directions that
    act only on the odd sector or annihilate the reference state).
    """
    h0, h1 = hva_tfim_generators(n_qubits)
    par = kron(*([X] * n_qubits))
    evals, vecs = np.linalg.eigh(par)
    v_even = vecs[:, evals > 0.5]
    g0 = v_even.conj().T @ h0 @ v_even
    g1 = v_even.conj().T @ h1 @ v_even
    # restriction keeps Hermiticity; re-zero the trace against roundoff
    d = g0.shape[0]
    g0 = (g0 + g0.conj().T) / 2
    g1 = (g1 + g1.conj().T) / 2
    g0 -= np.trace(g0) / d * np.eye(d)
    g1 -= np.trace(g1) / d * np.eye(d)
    return g0, g1


# ---------------------------------------------------------------------------
# Statevector path (noiseless circuits only), used by the pure-state QFIM
# ---------------------------------------------------------------------------


def _require_noiseless(circuit: NoisyCircuit) -> None:
    if any(s is not None for s in circuit.noise_slots):
        raise ValueError("statevector evolution requires a circuit with no noise slots")


def evolve_statevector(circuit: NoisyCircuit, theta: np.ndarray, psi: np.ndarray) -> np.ndarray:
    """Apply the gate sequence to a state vector (noiseless circuits only)."""
    _require_noiseless(circuit)
    theta = np.asarray(theta, dtype=float)
    out = psi
    for m in range(circuit.n_params):
        out = _gate(circuit, m, theta[m]) @ out
    return out


def statevector_derivatives(
    circuit: NoisyCircuit, theta: np.ndarray, psi: np.ndarray
) -> tuple[np.ndarray, list[np.ndarray]]:
    """Final state vector and its exact parameter derivatives.

    ``d|psi>/d theta_i`` inserts ``-i H_i`` after gate ``i`` and applies the
    remaining gates.
    """
    _require_noiseless(circuit)
    theta = np.asarray(theta, dtype=float)
    m_tot = circuit.n_params
    after_gate = []
    out = psi
    gates = []
    for m in range(m_tot):
        u = _gate(circuit, m, theta[m])
        gates.append(u)
        out = u @ out
        after_gate.append(out)
    derivs = []
    for i in range(m_tot):
        h = circuit.generators[circuit.layers[i]]
        v = -1j * (h @ after_gate[i])
        for m in range(i + 1, m_tot):
            v = gates[m] @ v
        derivs.append(v)
    return out, derivs
