"""Seeded random operators, states, and channels.

Every function takes a ``numpy.random.Generator``. Experiment code builds its
generators from the Philox counter-based bit stream (see ``experiments``), so
sampled objects are reproducible across runs from a single integer seed.
"""

from __future__ import annotations

import numpy as np

from .linalg import dag


def rng_from_seed(seed: int) -> np.random.Generator:
    """Counter-based Philox generator; the package-wide reproducibility anchor."""
    return np.random.Generator(np.random.Philox(key=int(seed)))


def random_hermitian(d: int, rng: np.random.Generator, traceless: bool = False) -> np.ndarray:
    """GUE-style Hermitian matrix with entries of O(1) magnitude."""
    a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    h = (a + dag(a)) / 2
    if traceless:
        h -= np.trace(h) / d * np.eye(d)
    return h


def random_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary via QR of a Ginibre matrix."""
    a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    q, r = np.linalg.qr(a)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def random_statevector(d: int, rng: np.random.Generator) -> np.ndarray:
    psi = rng.normal(size=d) + 1j * rng.normal(size=d)
    return psi / np.linalg.norm(psi)


def random_density_matrix(d: int, rng: np.random.Generator, rank: int | None = None) -> np.ndarray:
    """Density matrix from a normalized Wishart factor of the given rank."""
    if rank is None:
        rank = d
    g = rng.normal(size=(d, rank)) + 1j * rng.normal(size=(d, rank))
    rho = g @ dag(g)
    return rho / np.trace(rho).real
