"""Quantum channels: unital Pauli mixtures, depolarizing noise, composition.

All channels act linearly on arbitrary square matrices (not only density
matrices), which is what derivative propagation and superoperator
materialization require. Channels are immutable after construction and safe
to apply concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .exceptions import DimensionMismatchError, TooLargeError
from .linalg import I2, X, Z, dag, insert_qubit, kron, n_qubits_of, partial_trace

# Dense d^2 x d^2 materialization is a desk-scale diagnostic only.
SUPEROP_MAX_QUBITS = 5

_XZ_SINGLE = {(0, 0): I2, (1, 0): X, (0, 1): Z, (1, 1): X @ Z}


@dataclass(frozen=True)
class PauliString:
    """An n-qubit Pauli operator written as X^alpha Z^beta.

    ``alpha`` and ``beta`` are bit vectors; qubit ``j`` carries the factor
    ``X**alpha[j] @ Z**beta[j]``. The all-zero string is the identity.
    """

    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    def __post_init__(self):
        if len(self.alpha) != len(self.beta):
            raise ValueError("alpha and beta must have equal length")
        if any(b not in (0, 1) for b in self.alpha + self.beta):
            raise ValueError("alpha and beta entries must be bits")
        object.__setattr__(self, "alpha", tuple(int(b) for b in self.alpha))
        object.__setattr__(self, "beta", tuple(int(b) for b in self.beta))

    @property
    def n_qubits(self) -> int:
        return len(self.alpha)

    @classmethod
    def identity(cls, n_qubits: int) -> "PauliString":
        return cls((0,) * n_qubits, (0,) * n_qubits)

    @classmethod
    def single(cls, n_qubits: int, qubit: int, kind: str) -> "PauliString":
        """One nontrivial factor (``"X"``, ``"Y"``, or ``"Z"``) on ``qubit``."""
        a, b = [0] * n_qubits, [0] * n_qubits
        if kind in ("X", "Y"):
            a[qubit] = 1
        if kind in ("Z", "Y"):
            b[qubit] = 1
        if kind not in ("X", "Y", "Z"):
            raise ValueError(f"unknown Pauli kind {kind!r}")
        return cls(tuple(a), tuple(b))

    def materialize(self) -> np.ndarray:
        """Dense matrix of the string (Y appears as XZ = -iY, a global phase)."""
        return kron(*(_XZ_SINGLE[(a, b)] for a, b in zip(self.alpha, self.beta)))


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v)) % 2


class Channel:
    """Base class: a completely positive trace-preserving linear map."""

    n_qubits: int

    @property
    def dim(self) -> int:
        return 2**self.n_qubits

    def apply(self, mat: np.ndarray) -> np.ndarray:
        """Apply the channel's linear extension to a square matrix."""
        if mat.shape != (self.dim, self.dim):
            raise DimensionMismatchError(
                f"channel on {self.n_qubits} qubits cannot act on shape {mat.shape}"
            )
        return self._apply(mat)

    def _apply(self, mat: np.ndarray) -> np.ndarray:
        raise NotImplementedError


@dataclass(frozen=True)
class UnitaryChannel(Channel):
    """Conjugation ``rho -> U rho U†``."""

    u: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "n_qubits", n_qubits_of(self.u))

    def _apply(self, mat: np.ndarray) -> np.ndarray:
        return self.u @ mat @ dag(self.u)


class PauliChannel(Channel):
    """Random-Pauli mixture ``rho -> sum_k p_k P_k rho P_k†`` (unital).

    ``terms`` is a sparse list of ``(PauliString, probability)`` pairs. The
    probabilities must be nonnegative and sum to 1 within 1e-12; they are
    renormalized to machine precision at construction.
    """

    def __init__(self, terms: Sequence[tuple[PauliString, float]]):
        if not terms:
            raise ValueError("a Pauli channel needs at least one term")
        n = terms[0][0].n_qubits
        if any(s.n_qubits != n for s, _ in terms):
            raise DimensionMismatchError("all Pauli strings must act on the same qubit count")
        probs = np.array([float(p) for _, p in terms])
        if np.any(probs < 0):
            raise ValueError("Pauli-channel probabilities must be nonnegative")
        total = float(probs.sum())
        if abs(total - 1.0) > 1e-12:
            raise ValueError(f"Pauli-channel probabilities sum to {total}, expected 1")
        self.n_qubits = n
        self.terms: tuple[tuple[PauliString, float], ...] = tuple(
            (s, float(p) / total) for (s, _), p in zip(terms, probs)
        )
        self._mats = tuple(s.materialize() for s, _ in self.terms)

    def _apply(self, mat: np.ndarray) -> np.ndarray:
        out = np.zeros_like(mat, dtype=complex)
        for (_, p), pm in zip(self.terms, self._mats):
            out += p * (pm @ mat @ dag(pm))
        return out

    def transfer_coefficient(self, target: PauliString) -> float:
        """Eigenvalue of the channel on the Pauli operator ``target``.

        Unital Pauli channels are diagonal in the Pauli basis:
        ``N(P) = c * P`` with ``c = sum_k (+-1) p_k`` where the sign tracks
        whether ``P_k`` commutes or anticommutes with ``target``.
        """
        if target.n_qubits != self.n_qubits:
            raise DimensionMismatchError("target string qubit count does not match channel")
        c = 0.0
        for s, p in self.terms:
            sign = -1.0 if (_dot(target.alpha, s.beta) + _dot(s.alpha, target.beta)) % 2 else 1.0
            c += sign * p
        return c


@dataclass(frozen=True)
class GlobalDepolarizing(Channel):
    """``rho -> (1-p) rho + p Tr[rho] I/d``."""

    n_qubits: int
    p: float

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"depolarizing probability {self.p} outside [0, 1]")

    def _apply(self, mat: np.ndarray) -> np.ndarray:
        d = self.dim
        return (1.0 - self.p) * mat + self.p * (np.trace(mat) / d) * np.eye(d)


@dataclass(frozen=True)
class LocalDepolarizing(Channel):
    """Per-qubit depolarizing noise, applied qubit by qubit.

    Qubit ``j`` undergoes ``rho -> (1-p_j) rho + p_j I_j/2 (x) Tr_j[rho]``
    (the partial-trace form, equivalent to the 4-term Kraus mixture).
    """

    probs: tuple[float, ...]

    def __post_init__(self):
        probs = tuple(float(p) for p in self.probs)
        if any(not 0.0 <= p <= 1.0 for p in probs):
            raise ValueError(f"depolarizing probabilities {probs} outside [0, 1]")
        object.__setattr__(self, "probs", probs)
        object.__setattr__(self, "n_qubits", len(probs))

    @classmethod
    def uniform(cls, n_qubits: int, p: float) -> "LocalDepolarizing":
        return cls((float(p),) * n_qubits)

    def _apply(self, mat: np.ndarray) -> np.ndarray:
        out = mat
        for j, p in enumerate(self.probs):
            if p == 0.0:
                continue
            reduced = partial_trace(out, [j])
            out = (1.0 - p) * out + p * insert_qubit(reduced, j, I2 / 2)
        # value semantics: never hand back the caller's array
        return out.copy() if out is mat else out


class CompositeChannel(Channel):
    """Ordered concatenation; ``steps[0]`` acts first."""

    def __init__(self, steps: Sequence[Channel]):
        if not steps:
            raise ValueError("a composite channel needs at least one step")
        n = steps[0].n_qubits
        if any(ch.n_qubits != n for ch in steps):
            raise DimensionMismatchError("all composed channels must share the qubit count")
        self.n_qubits = n
        flat: list[Channel] = []
        for ch in steps:
            if isinstance(ch, CompositeChannel):
                flat.extend(ch.steps)
            else:
                flat.append(ch)
        self.steps: tuple[Channel, ...] = tuple(flat)

    def _apply(self, mat: np.ndarray) -> np.ndarray:
        for ch in self.steps:
            mat = ch.apply(mat)
        return mat


def identity_channel(n_qubits: int) -> PauliChannel:
    return PauliChannel([(PauliString.identity(n_qubits), 1.0)])


def bit_flip(p: float, n_qubits: int = 1, qubit: int = 0) -> PauliChannel:
    """Bit-flip channel ``rho -> (1-p) rho + p X rho X`` on one qubit."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"bit-flip probability {p} outside [0, 1]")
    return PauliChannel(
        [
            (PauliString.identity(n_qubits), 1.0 - p),
            (PauliString.single(n_qubits, qubit, "X"), p),
        ]
    )


def compose(outer: Channel, inner: Channel) -> CompositeChannel:
    """Channel equal to ``outer`` after ``inner``: ``rho -> outer(inner(rho))``."""
    if outer.n_qubits != inner.n_qubits:
        raise DimensionMismatchError("composed channels must share the qubit count")
    return CompositeChannel([inner, outer])


def effective_global_depol(probs: Sequence[float], n_qubits: int) -> GlobalDepolarizing:
    """Single global-depolarizing channel equivalent to a stack of them.

    A sequence of global depolarizing channels with probabilities ``p_m``
    (interleaved with arbitrary unitaries) retains the coherent part with
    weight ``prod_m (1 - p_m)``.
    """
    probs = [float(p) for p in probs]
    if not probs:
        raise ValueError("need at least one probability")
    if any(not 0.0 < p <= 1.0 for p in probs):
        raise ValueError(f"probabilities {probs} outside (0, 1]")
    retained = 1.0
    for p in probs:
        retained *= 1.0 - p
    return GlobalDepolarizing(n_qubits, 1.0 - retained)


def decompose_local_depol(
    probs: Sequence[float],
) -> tuple[LocalDepolarizing, LocalDepolarizing]:
    """Split qubit-dependent depolarizing noise into uniform and residual parts.

    With ``q = min_j p_j``, a per-qubit depolarizing channel with probability
    ``p_j`` equals a uniform channel at ``q`` composed with a residual one at
    ``tau_j = (p_j - q) / (1 - q)``; the two commute. Returns
    ``(uniform, residual)``.
    """
    probs = [float(p) for p in probs]
    if any(not 0.0 < p < 1.0 for p in probs):
        raise ValueError(f"probabilities {probs} outside (0, 1)")
    q = min(probs)
    taus = tuple((p - q) / (1.0 - q) for p in probs)
    return LocalDepolarizing.uniform(len(probs), q), LocalDepolarizing(taus)


def _vec(mat: np.ndarray) -> np.ndarray:
    """Column-stacking vectorization."""
    return mat.T.reshape(-1)


def _unvec(v: np.ndarray, d: int) -> np.ndarray:
    return v.reshape(d, d).T


def superoperator(ch: Channel, max_qubits: int = SUPEROP_MAX_QUBITS) -> np.ndarray:
    """Dense d^2 x d^2 matrix of the channel under column stacking.

    Satisfies ``vec(ch.apply(rho)) == S @ vec(rho)``. Capped at
    ``max_qubits`` because the output has ``16**n`` entries.
    """
    if ch.n_qubits > max_qubits:
        raise TooLargeError(f"superoperator capped at {max_qubits} qubits, got {ch.n_qubits}")
    d = ch.dim
    s = np.zeros((d * d, d * d), dtype=complex)
    basis = np.zeros((d, d), dtype=complex)
    for k in range(d):
        for l in range(d):
            basis[k, l] = 1.0
            s[:, k + d * l] = _vec(ch.apply(basis))
            basis[k, l] = 0.0
    return s


def choi_matrix(ch: Channel, max_qubits: int = SUPEROP_MAX_QUBITS) -> np.ndarray:
    """Unnormalized Choi matrix ``sum_kl |k><l| (x) ch(|k><l|)`` (trace d)."""
    if ch.n_qubits > max_qubits:
        raise TooLargeError(f"Choi matrix capped at {max_qubits} qubits, got {ch.n_qubits}")
    d = ch.dim
    c = np.zeros((d * d, d * d), dtype=complex)
    basis = np.zeros((d, d), dtype=complex)
    for k in range(d):
        for l in range(d):
            basis[k, l] = 1.0
            c += np.kron(basis, ch.apply(basis))
            basis[k, l] = 0.0
    return c


@dataclass(frozen=True)
class CptpReport:
    """Outcome of :func:`verify_cptp`."""

    trace_preserving: bool
    tp_deviation: float
    completely_positive: bool
    choi_min_eigenvalue: float
    unital: bool
    unitality_deviation: float

    @property
    def ok(self) -> bool:
        return self.trace_preserving and self.completely_positive


def verify_cptp(
    ch: Channel,
    tp_atol: float = 1e-10,
    cp_atol: float = 1e-9,
    unital_atol: float = 1e-10,
) -> CptpReport:
    """Check trace preservation, complete positivity, and unitality.

    Trace preservation is the superoperator-adjoint fixed-point test
    ``S† vec(I) == vec(I)``; complete positivity is the minimum eigenvalue of
    the Choi matrix; unitality applies the channel to the identity.
    """
    d = ch.dim
    s = superoperator(ch)
    vec_id = _vec(np.eye(d, dtype=complex))
    tp_dev = float(np.max(np.abs(dag(s) @ vec_id - vec_id)))
    c = choi_matrix(ch)
    min_eig = float(np.linalg.eigvalsh((c + dag(c)) / 2)[0])
    unital_dev = float(np.max(np.abs(ch.apply(np.eye(d, dtype=complex)) - np.eye(d))))
    return CptpReport(
        trace_preserving=tp_dev <= tp_atol,
        tp_deviation=tp_dev,
        completely_positive=min_eig >= -cp_atol,
        choi_min_eigenvalue=min_eig,
        unital=unital_dev <= unital_atol,
        unitality_deviation=unital_dev,
    )
