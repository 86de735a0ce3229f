"""Random-state generators for tests and the fuzz command.

Everything takes a numpy Generator so runs are reproducible from a single
seed. Density matrices come out exactly Hermitian with trace one by
construction; PSD families are PSD up to rounding.
"""

from __future__ import annotations

import math

import numpy as np

from .linalg import kron


def ginibre_density(rng: np.random.Generator) -> np.ndarray:
    """Full-rank random density matrix G G^dag / tr(G G^dag), complex
    Gaussian G. This is the Hilbert-Schmidt ensemble."""
    g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    m = g @ g.conj().T
    m /= m.trace().real
    return (m + m.conj().T) / 2.0


def rank_deficient_density(rng: np.random.Generator, rank: int) -> np.ndarray:
    """Random density matrix of the given rank (1..4), via a rectangular
    Ginibre factor."""
    if not 1 <= rank <= 4:
        raise ValueError(f"rank must be 1..4, got {rank}")
    g = rng.standard_normal((4, rank)) + 1j * rng.standard_normal((4, rank))
    m = g @ g.conj().T
    m /= m.trace().real
    return (m + m.conj().T) / 2.0


def random_hermitian_trace_one(
    rng: np.random.Generator, scale: float = 1.0
) -> np.ndarray:
    """Random Hermitian matrix with trace one but no positivity: Gaussian
    Hermitian, then the trace surplus is spread over the diagonal. Probes
    the solver on the full Hermitian domain, not just density matrices."""
    g = scale * (rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)))
    h = (g + g.conj().T) / 2.0
    h += (1.0 - h.trace().real) / 4.0 * np.eye(4)
    return h


def haar_pure(rng: np.random.Generator) -> np.ndarray:
    """Haar-random pure two-qubit state vector (length-4, unit norm)."""
    v = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    return v / np.linalg.norm(v)


def random_product_pure(rng: np.random.Generator) -> np.ndarray:
    """Product of two Haar-random single-qubit states."""
    a = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    b = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    a /= np.linalg.norm(a)
    b /= np.linalg.norm(b)
    return np.kron(a, b)


def pure_density(state) -> np.ndarray:
    """Projector |psi><psi| from a state vector."""
    v = np.asarray(state, dtype=complex).ravel()
    return np.outer(v, v.conj())


def bell_state() -> np.ndarray:
    """(|00> + |11>)/sqrt(2)."""
    return np.array([1.0, 0.0, 0.0, 1.0], dtype=complex) / math.sqrt(2.0)


def werner_state(p: float) -> np.ndarray:
    """p |Phi+><Phi+| + (1-p) I/4; a density matrix for p in [-1/3, 1],
    entangled exactly when p > 1/3."""
    if not -1.0 / 3.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [-1/3, 1], got {p}")
    return p * pure_density(bell_state()) + (1.0 - p) * np.eye(4) / 4.0


def embed_four_qubit(c, mid, d) -> np.ndarray:
    """|c> (x) |mid> (x) |d> for single-qubit c, d and a two-qubit middle."""
    return kron(c, kron(mid, d)).ravel()
