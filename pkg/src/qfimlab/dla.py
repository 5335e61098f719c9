"""Dynamical Lie algebra of a generator set, by iterated nested commutators.

The algebra is treated as a real vector space of skew-Hermitian matrices with
inner product ``Re Tr[a† b]``. Starting from the orthonormalized ``i G``, new
directions are found by commuting fresh elements against the current basis;
a candidate joins the basis when its residual after projection exceeds
``TAU_INDEP``. A final full pairwise pass certifies closure.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import CapExceededError
from .linalg import TAU_HERM, check_hermitian, commutator

# Residual-norm threshold separating new directions from roundoff at d <= 64.
TAU_INDEP = 1e-8


@dataclass(frozen=True)
class LieBasis:
    """Orthonormal (Re Tr[a†b]) basis of skew-Hermitian matrices."""

    elements: tuple[np.ndarray, ...]

    @property
    def dim(self) -> int:
        return len(self.elements)

    def project_residual(self, mat: np.ndarray) -> float:
        """Norm of ``mat`` after removing its projection onto the span."""
        r = _project_out(mat, self.elements)
        return float(np.linalg.norm(r))


def _inner(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.vdot(a, b).real)


def _project_out(mat: np.ndarray, basis) -> np.ndarray:
    r = mat
    for e in basis:
        r = r - _inner(e, r) * e
    # second Gram-Schmidt pass for numerical orthogonality
    for e in basis:
        r = r - _inner(e, r) * e
    return r


def lie_closure(
    generators,
    max_dim: int | None = None,
    tol: float = TAU_INDEP,
) -> LieBasis:
    """Orthonormal basis of the Lie algebra generated by ``i * generators``.

    Generators must be Hermitian and traceless. ``max_dim`` defaults to
    ``d**2`` (the real dimension of u(d), never exceeded by a subalgebra);
    hitting the cap raises :class:`CapExceededError` with the partial
    dimension attached.
    """
    gens = [np.asarray(g, dtype=complex) for g in generators]
    if not gens:
        raise ValueError("need at least one generator")
    d = gens[0].shape[0]
    for k, g in enumerate(gens):
        if g.shape != (d, d):
            raise ValueError(f"generator {k} has shape {g.shape}, expected {(d, d)}")
        check_hermitian(g, TAU_HERM, f"generator {k}")
        if abs(np.trace(g)) > 1e-9:
            raise ValueError(f"generator {k} has trace {np.trace(g):.3e}, expected traceless")
    cap = d * d if max_dim is None else int(max_dim)
    if cap < 1:
        raise ValueError("max_dim must be at least 1")

    basis: list[np.ndarray] = []

    def try_add(candidate: np.ndarray) -> bool:
        r = _project_out(candidate, basis)
        norm = float(np.linalg.norm(r))
        if norm <= tol:
            return False
        if len(basis) >= cap:
            raise CapExceededError(
                f"Lie closure exceeded the dimension cap {cap}", partial_dim=len(basis)
            )
        basis.append(r / norm)
        return True

    for g in gens:
        try_add(1j * g)

    # Worklist: commute newly added elements against everything first.
    fresh = list(range(len(basis)))
    while True:
        while fresh:
            i = fresh.pop(0)
            j = 0
            while j < len(basis):
                if try_add(commutator(basis[i], basis[j])):
                    fresh.append(len(basis) - 1)
                j += 1
        # Full pairwise pass as the termination certificate.
        added = False
        n = len(basis)
        for i in range(n):
            for j in range(i + 1, n):
                if try_add(commutator(basis[i], basis[j])):
                    fresh.append(len(basis) - 1)
                    added = True
        if not added:
            break
    return LieBasis(tuple(basis))


def dla_dimension(generators, max_dim: int | None = None, tol: float = TAU_INDEP) -> int:
    """Dimension of the dynamical Lie algebra; see :func:`lie_closure`."""
    return lie_closure(generators, max_dim=max_dim, tol=tol).dim


def pauli_expansion(op: np.ndarray, cutoff: float = 1e-10) -> dict[str, complex]:
    """Expand a matrix over the n-qubit Pauli basis; drops tiny coefficients.

    Keys are strings like ``"XIZ"``; the coefficient of ``P`` is
    ``Tr[P op] / d``. Only meaningful when the matrix side is a power of two.
    """
    from itertools import product

    from .linalg import PAULIS, kron, n_qubits_of

    n = n_qubits_of(op)
    out: dict[str, complex] = {}
    for labels in product("IXYZ", repeat=n):
        p = kron(*(PAULIS[c] for c in labels)) if n > 1 else PAULIS[labels[0]]
        coeff = complex(np.trace(p @ op)) / op.shape[0]
        if abs(coeff) > cutoff:
            out["".join(labels)] = coeff
    return out
