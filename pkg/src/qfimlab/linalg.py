"""Dense complex linear algebra for qubit registers.

Operators and states are plain ``numpy.ndarray`` complex matrices of shape
``(d, d)`` with ``d = 2**n``. Qubit 0 is the leftmost tensor factor, i.e. the
most significant bit of the computational-basis index. All functions are pure
and never mutate their inputs, so values can be shared freely across threads.

Hermitian eigendecompositions are delegated to LAPACK via
``numpy.linalg.eigh`` (ascending eigenvalues, orthonormal columns), which is
deterministic for identical input on a fixed build.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from .exceptions import DimensionMismatchError, NotHermitianError

# Numerical tolerances (double-precision headroom at d <= 1024).
TAU_HERM = 1e-9
TAU_UNIT = 1e-9
TAU_EIG = 1e-9
TAU_TRACE = 1e-9
TAU_PSD = 1e-9
# Spectral floor: eigenvalue pairs below this are treated as zero.
TAU_SPEC = 1e-12

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = {"I": I2, "X": X, "Y": Y, "Z": Z}

KET_0 = np.array([1, 0], dtype=complex)
KET_PLUS = np.array([1, 1], dtype=complex) / np.sqrt(2)


class EigenDecomposition(NamedTuple):
    """Eigenvalues in ascending order and the matrix of column eigenvectors."""

    values: np.ndarray
    vectors: np.ndarray


def dag(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return a.conj().T


def kron(*ops: np.ndarray) -> np.ndarray:
    """Kronecker product of one or more square matrices, left to right."""
    out = np.asarray(ops[0], dtype=complex)
    for op in ops[1:]:
        out = np.kron(out, op)
    return out


def n_qubits_of(mat: np.ndarray) -> int:
    """Number of qubits of a square matrix whose side is a power of two."""
    d = mat.shape[0]
    if mat.ndim != 2 or mat.shape[1] != d:
        raise DimensionMismatchError(f"expected a square matrix, got shape {mat.shape}")
    n = d.bit_length() - 1
    if 2**n != d:
        raise DimensionMismatchError(f"matrix side {d} is not a power of two")
    return n


def is_hermitian(a: np.ndarray, atol: float = TAU_HERM) -> bool:
    """Max-entry check of ``A == A†``."""
    return bool(np.max(np.abs(a - a.conj().T)) <= atol)


def is_unitary(a: np.ndarray, atol: float = TAU_UNIT) -> bool:
    """Max-entry check of ``A†A == I``."""
    d = a.shape[0]
    return bool(np.max(np.abs(a.conj().T @ a - np.eye(d))) <= atol)


def check_hermitian(a: np.ndarray, atol: float = TAU_HERM, name: str = "matrix") -> None:
    dev = float(np.max(np.abs(a - a.conj().T)))
    if dev > atol:
        raise NotHermitianError(f"{name} deviates from Hermiticity by {dev:.3e} (> {atol:.1e})")


def check_density_matrix(rho: np.ndarray, atol: float = TAU_PSD) -> None:
    """Validate Hermiticity, unit trace, and positive semidefiniteness.

    Raises ``NotHermitianError`` or ``ValueError`` on violation. This runs an
    eigendecomposition; use it at construction/test boundaries, not in loops.
    """
    check_hermitian(rho, TAU_HERM, "density matrix")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > TAU_TRACE:
        raise ValueError(f"density matrix trace {tr} deviates from 1 by more than {TAU_TRACE:.1e}")
    min_eig = float(np.linalg.eigvalsh((rho + rho.conj().T) / 2)[0])
    if min_eig < -atol:
        raise ValueError(f"density matrix has eigenvalue {min_eig:.3e} below -{atol:.1e}")


def hermitian_eig(a: np.ndarray, atol: float = TAU_HERM) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    The input is validated against ``atol`` and symmetrized before the solve,
    so roundoff-level asymmetry cannot leak into the spectrum.
    """
    check_hermitian(a, atol)
    values, vectors = np.linalg.eigh((a + a.conj().T) / 2)
    return EigenDecomposition(values, vectors)


def herm_exp(h: np.ndarray, theta: float, atol: float = TAU_HERM) -> np.ndarray:
    """Unitary ``exp(-i * theta * h)`` for Hermitian ``h``, via eigendecomposition."""
    values, vectors = hermitian_eig(h, atol)
    phases = np.exp(-1j * theta * values)
    return (vectors * phases) @ vectors.conj().T


def herm_exp_from_eig(eig: EigenDecomposition, theta: float) -> np.ndarray:
    """Same as :func:`herm_exp` but reusing a precomputed eigendecomposition."""
    phases = np.exp(-1j * theta * eig.values)
    return (eig.vectors * phases) @ eig.vectors.conj().T


def partial_trace(rho: np.ndarray, drop: Sequence[int]) -> np.ndarray:
    """Trace out the qubits listed in ``drop`` (0-based), keeping the rest in order."""
    n = n_qubits_of(rho)
    drop = sorted(set(int(q) for q in drop))
    if drop and (drop[0] < 0 or drop[-1] >= n):
        raise IndexError(f"qubit indices {drop} out of range for {n} qubits")
    t = rho.reshape((2,) * (2 * n))
    n_cur = n
    for q in reversed(drop):
        t = np.trace(t, axis1=q, axis2=q + n_cur)
        n_cur -= 1
    d_out = 2**n_cur
    return t.reshape(d_out, d_out)


def permute_qubits(mat: np.ndarray, perm: Sequence[int]) -> np.ndarray:
    """Reorder tensor factors: output qubit ``i`` is input qubit ``perm[i]``."""
    n = n_qubits_of(mat)
    perm = list(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"{perm} is not a permutation of 0..{n - 1}")
    t = mat.reshape((2,) * (2 * n))
    axes = perm + [p + n for p in perm]
    return t.transpose(axes).reshape(mat.shape)


def insert_qubit(mat: np.ndarray, position: int, op2: np.ndarray) -> np.ndarray:
    """Tensor a single-qubit operator into ``mat`` so it sits at ``position``."""
    n = n_qubits_of(mat)
    if not 0 <= position <= n:
        raise IndexError(f"insert position {position} out of range for {n} qubits")
    full = np.kron(op2, mat)  # new qubit is factor 0
    perm = list(range(1, position + 1)) + [0] + list(range(position + 1, n + 1))
    return permute_qubits(full, perm)


def frobenius_inner(a: np.ndarray, b: np.ndarray) -> complex:
    """Frobenius (Hilbert-Schmidt) inner product ``Tr[a† b]``."""
    if a.shape != b.shape:
        raise DimensionMismatchError(f"shape mismatch {a.shape} vs {b.shape}")
    return complex(np.vdot(a, b))


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def purity(rho: np.ndarray) -> float:
    """``Tr[rho^2]``."""
    return float(np.vdot(rho, rho).real)


def embed_single_qubit(op2: np.ndarray, qubit: int, n: int) -> np.ndarray:
    """Place a single-qubit operator on ``qubit`` of an ``n``-qubit register."""
    if not 0 <= qubit < n:
        raise IndexError(f"qubit {qubit} out of range for {n} qubits")
    ops = [I2] * n
    ops[qubit] = op2
    return kron(*ops)
