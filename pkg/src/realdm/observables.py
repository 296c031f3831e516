"""Scalar functionals of real density matrices and the partial trace."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .tensor_core import DomainError, qubits_for_side
from .xform import real_observable


@dataclass(frozen=True, eq=False)
class ObservablePair:
    """A Hermitian observable ``mu`` together with its real form ``nu = U(mu)``."""

    mu: np.ndarray
    nu: np.ndarray = field(init=False)
    n: int = field(init=False)

    def __post_init__(self):
        mu = np.asarray(self.mu, dtype=complex)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "nu", real_observable(mu))
        object.__setattr__(self, "n", qubits_for_side(mu.shape[0]))


def _side(sigma: np.ndarray) -> int:
    if sigma.ndim != 2 or sigma.shape[0] != sigma.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {sigma.shape}")
    return qubits_for_side(sigma.shape[0])


def purity(sigma: np.ndarray) -> float:
    """``2^-n tr(sigma^T sigma)``, equal to ``tr(rho^2)``."""
    sigma = np.asarray(sigma, dtype=float)
    n = _side(sigma)
    return float(np.sum(sigma * sigma)) / 2**n


def expect(obs: ObservablePair | np.ndarray, sigma: np.ndarray) -> float:
    """Expectation value ``tr(mu rho) = 2^-n tr(nu^T sigma)``."""
    if not isinstance(obs, ObservablePair):
        obs = ObservablePair(obs)
    sigma = np.asarray(sigma, dtype=float)
    n = _side(sigma)
    if n != obs.n:
        raise DomainError(f"observable acts on {obs.n} qubits, state has {n}")
    return float(np.sum(obs.nu * sigma)) / 2**n


def partial_trace_indices(n: int, keep) -> np.ndarray:
    """Composite indices whose bits vanish at every discarded qubit (1-based)."""
    keep = sorted(set(int(k) for k in keep))
    if not keep or keep[0] < 1 or keep[-1] > n:
        raise DomainError(f"keep must be a non-empty subset of 1..{n}, got {keep}")
    drop_mask = 0
    for q in range(1, n + 1):
        if q not in keep:
            drop_mask |= 1 << (n - q)
    return np.array([i for i in range(2**n) if i & drop_mask == 0])


def partial_trace(sigma: np.ndarray, keep) -> np.ndarray:
    """Reduce to the qubits in ``keep``: a principal submatrix, no rescaling."""
    sigma = np.asarray(sigma, dtype=float)
    idx = partial_trace_indices(_side(sigma), keep)
    return sigma[np.ix_(idx, idx)].copy()
