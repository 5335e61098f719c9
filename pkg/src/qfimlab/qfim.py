"""Quantum Fisher information matrices, spectra, ranks, and state distances.

The mixed-state QFIM is assembled from the matrix-element form

    F_ij = sum_{mu,nu : r_mu + r_nu > 0}
           2 Re[ <r_mu| d_i rho |r_nu> <r_nu| d_j rho |r_mu> ] / (r_mu + r_nu),

with the pair restriction implemented as a spectral floor: pairs whose
eigenvalue sum falls below ``TAU_SPEC`` contribute nothing. Derivatives are
expected to be exact (see ``circuits``); finite differences would pollute
rank decisions near the tolerance.

Numerical rank counts eigenvalues above ``tau_abs + tau_rel * lambda_max``;
both knobs are explicit on every report because the small-noise regime makes
this threshold the central reproducibility parameter.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .circuits import NoisyCircuit, evolve_with_derivatives
from .exceptions import DegenerateDistributionError, DimensionMismatchError
from .linalg import TAU_SPEC, dag, hermitian_eig

TAU_RANK_ABS = 1e-12
TAU_RANK_REL = 1e-10
TAU_PROB = 1e-12


@dataclass(frozen=True)
class QfimReport:
    """A QFIM with its spectrum, tolerance-based rank, and capacity counts.

    ``eigenvalues`` are sorted descending. ``rank`` counts eigenvalues above
    ``tau_abs + tau_rel * max(eigenvalues)``; ``d1`` equals the rank for a
    single-state dataset, and ``d1_epsilon`` counts eigenvalues above the
    explicit threshold ``epsilon`` (defaults to the rank threshold).
    """

    matrix: np.ndarray
    eigenvalues: np.ndarray
    rank: int
    tau_abs: float
    tau_rel: float
    d1: int
    d1_epsilon: int
    epsilon: float

    def to_dict(self) -> dict:
        """JSON-ready payload (row-major matrix)."""
        return {
            "matrix": [[float(v) for v in row] for row in self.matrix],
            "eigenvalues": [float(v) for v in self.eigenvalues],
            "rank": self.rank,
            "tolerance": {"abs": self.tau_abs, "rel": self.tau_rel},
            "d1": self.d1,
            "d1_epsilon": self.d1_epsilon,
            "epsilon": self.epsilon,
        }


def rank_of_spectrum(eigenvalues: np.ndarray, tau_abs: float, tau_rel: float) -> int:
    lam_max = float(np.max(eigenvalues, initial=0.0))
    return int(np.sum(eigenvalues > tau_abs + tau_rel * lam_max))


def report_from_matrix(
    matrix: np.ndarray,
    tau_abs: float = TAU_RANK_ABS,
    tau_rel: float = TAU_RANK_REL,
    epsilon: float | None = None,
) -> QfimReport:
    """Symmetrize, diagonalize, and attach rank/capacity data to a QFIM."""
    matrix = np.asarray(matrix, dtype=float)
    matrix = (matrix + matrix.T) / 2
    eigs = np.linalg.eigvalsh(matrix)[::-1]
    rank = rank_of_spectrum(eigs, tau_abs, tau_rel)
    if epsilon is None:
        eps = tau_abs + tau_rel * float(np.max(eigs, initial=0.0))
        d1_eps = rank
    else:
        eps = float(epsilon)
        d1_eps = int(np.sum(eigs > eps))
    return QfimReport(matrix, eigs, rank, tau_abs, tau_rel, rank, d1_eps, eps)


def effective_dim_d1(report: QfimReport, epsilon: float | None = None) -> int:
    """Capacity count: eigenvalues above ``epsilon`` (rank threshold if omitted)."""
    if epsilon is None:
        return report.rank
    return int(np.sum(report.eigenvalues > float(epsilon)))


def qfim_pure(
    state: np.ndarray,
    derivs: Sequence[np.ndarray],
    tau_abs: float = TAU_RANK_ABS,
    tau_rel: float = TAU_RANK_REL,
) -> QfimReport:
    """Fubini-Study QFIM of a normalized state vector.

    ``F_ij = 4 Re[<d_i psi|d_j psi> - <d_i psi|psi><psi|d_j psi>]``.
    """
    nrm = float(np.linalg.norm(state))
    if abs(nrm - 1.0) > 1e-9:
        raise ValueError(f"state norm {nrm} deviates from 1 beyond 1e-9")
    m = len(derivs)
    overlaps = np.array([np.vdot(state, dv) for dv in derivs])
    f = np.empty((m, m))
    for i in range(m):
        for j in range(i, m):
            val = 4.0 * (np.vdot(derivs[i], derivs[j]) - np.conj(overlaps[i]) * overlaps[j]).real
            f[i, j] = f[j, i] = val
    return report_from_matrix(f, tau_abs, tau_rel)


def qfim_mixed(
    rho: np.ndarray,
    derivs: Sequence[np.ndarray],
    tau_abs: float = TAU_RANK_ABS,
    tau_rel: float = TAU_RANK_REL,
    tau_spec: float = TAU_SPEC,
) -> QfimReport:
    """Mixed-state QFIM from the eigenbasis matrix-element form."""
    evals, vecs = hermitian_eig(rho)
    pair_sum = evals[:, None] + evals[None, :]
    safe = np.where(pair_sum > tau_spec, pair_sum, 1.0)
    weights = np.where(pair_sum > tau_spec, 2.0 / safe, 0.0)
    in_basis = [dag(vecs) @ dv @ vecs for dv in derivs]
    m = len(derivs)
    f = np.empty((m, m))
    for i in range(m):
        for j in range(i, m):
            val = float(np.sum(weights * (in_basis[i] * np.conj(in_basis[j])).real))
            f[i, j] = f[j, i] = val
    return report_from_matrix(f, tau_abs, tau_rel)


def qfim_of_circuit(
    circuit: NoisyCircuit,
    theta: np.ndarray,
    rho: np.ndarray,
    tau_abs: float = TAU_RANK_ABS,
    tau_rel: float = TAU_RANK_REL,
) -> QfimReport:
    """Evolve, differentiate analytically, and assemble the mixed-state QFIM."""
    out, derivs = evolve_with_derivatives(circuit, theta, rho)
    return qfim_mixed(out, derivs, tau_abs, tau_rel)


def noisy_qfim_closed_form_global_depol(
    rho_noiseless: np.ndarray,
    derivs_noiseless: Sequence[np.ndarray],
    p: float,
    n_gates: int,
    tau_spec: float = TAU_SPEC,
) -> np.ndarray:
    """Closed-form QFIM under uniform global depolarizing slots.

    With ``x = (1-p)^(M+1)``, the noisy state keeps the noiseless eigenbasis,
    shifts eigenvalue pairs to ``x (r_mu + r_nu) + 2 (1-x)/d`` and scales
    derivative matrix elements by ``x``:

        F~_ij = sum 2 x^2 Re[<r_mu|d_i rho|r_nu><r_nu|d_j rho|r_mu>]
                / (x (r_mu + r_nu) + 2 (1-x)/d).

    Returns the raw matrix; wrap with :func:`report_from_matrix` if needed.
    """
    d = rho_noiseless.shape[0]
    x = (1.0 - p) ** (n_gates + 1)
    evals, vecs = hermitian_eig(rho_noiseless)
    denom = x * (evals[:, None] + evals[None, :]) + 2.0 * (1.0 - x) / d
    safe = np.where(denom > tau_spec, denom, 1.0)
    weights = np.where(denom > tau_spec, 2.0 * x * x / safe, 0.0)
    in_basis = [dag(vecs) @ dv @ vecs for dv in derivs_noiseless]
    m = len(derivs_noiseless)
    f = np.empty((m, m))
    for i in range(m):
        for j in range(i, m):
            val = float(np.sum(weights * (in_basis[i] * np.conj(in_basis[j])).real))
            f[i, j] = f[j, i] = val
    return f


def classical_fim(
    circuit: NoisyCircuit,
    theta: np.ndarray,
    rho: np.ndarray,
    tau_prob: float = TAU_PROB,
) -> np.ndarray:
    """Fisher information of the computational-basis outcome distribution.

    ``I_ij = sum_y (d_i p_y)(d_j p_y) / p_y`` over outcomes with
    ``p_y > tau_prob``.
    """
    out, derivs = evolve_with_derivatives(circuit, theta, rho)
    probs = np.diagonal(out).real
    grads = np.stack([np.diagonal(dv).real for dv in derivs])
    mask = probs > tau_prob
    if not np.any(mask):
        raise DegenerateDistributionError("all outcome probabilities below the floor")
    g = grads[:, mask] / np.sqrt(probs[mask])
    return g @ g.T


# ---------------------------------------------------------------------------
# Distances and entropies
# ---------------------------------------------------------------------------


def _check_pair(rho: np.ndarray, sigma: np.ndarray) -> None:
    if rho.shape != sigma.shape:
        raise DimensionMismatchError(f"state shapes differ: {rho.shape} vs {sigma.shape}")


def uhlmann_fidelity(rho: np.ndarray, sigma: np.ndarray) -> float:
    """``(Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2``, clipped to [0, 1]."""
    _check_pair(rho, sigma)
    evals, vecs = hermitian_eig(rho)
    sqrt_rho = (vecs * np.sqrt(np.clip(evals, 0.0, None))) @ dag(vecs)
    inner = sqrt_rho @ sigma @ sqrt_rho
    inner_evals = np.linalg.eigvalsh((inner + dag(inner)) / 2)
    root_sum = float(np.sum(np.sqrt(np.clip(inner_evals, 0.0, None))))
    return min(root_sum**2, 1.0)


def bures_distance(rho: np.ndarray, sigma: np.ndarray) -> float:
    """``2 (1 - sqrt(fidelity))``."""
    return 2.0 * (1.0 - np.sqrt(uhlmann_fidelity(rho, sigma)))


def trace_distance(rho: np.ndarray, sigma: np.ndarray) -> float:
    """``(1/2) ||rho - sigma||_1``."""
    _check_pair(rho, sigma)
    diff = rho - sigma
    evals = np.linalg.eigvalsh((diff + dag(diff)) / 2)
    return 0.5 * float(np.sum(np.abs(evals)))


def relative_entropy_to_mixed(rho: np.ndarray, tau_spec: float = TAU_SPEC) -> float:
    """``S(rho || I/d) = Tr[rho ln rho] + ln d`` in nats.

    Eigenvalues below the spectral floor contribute zero (x ln x -> 0).
    """
    d = rho.shape[0]
    evals = np.linalg.eigvalsh((rho + dag(rho)) / 2)
    pos = evals[evals > tau_spec]
    return float(np.sum(pos * np.log(pos)) + np.log(d))
