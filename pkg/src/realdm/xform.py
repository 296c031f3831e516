"""The bijection between Hermitian and real density matrices.

``to_real`` sends a Hermitian density matrix rho to the real matrix sigma with
``sigma[i, j] = tr(rho P_ij)``; ``to_hermitian`` inverts it. Superoperators
acting on ``vec(rho)`` are translated into the real domain, where they act on
``vec(sigma)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .tensor_core import (
    DomainError,
    MAX_SUPEROP_QUBITS,
    _P1,
    check_qubits,
    choi_reshuffle,
    kron,
    pauli,
    qubits_for_side,
    superop_qubits,
    unvec,
    vec,
)

HERMITIAN_TOL = 1e-10
TRACE_TOL = 1e-10
CORNER_TOL = 1e-10
IMAG_TOL = 1e-10
SVD_CUTOFF = 1e-12

Q = np.array([[1, -1j], [1, 1]], dtype=complex)


class ValidationError(DomainError):
    """A value violates a named invariant."""

    def __init__(self, invariant: str, message: str):
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant


# kernel[i, j, a, b] = P_ij[b, a], so that sum_ab kernel[i,j,a,b] x[a,b] = tr(x P_ij)
_TO_REAL_KERNEL = np.array([[_P1[(i, j)].T for j in (0, 1)] for i in (0, 1)])
# kernel[a, b, i, j] = P_ij[a, b] / 2
_TO_HERM_KERNEL = 0.5 * np.array(
    [[[[_P1[(i, j)][a, b] for j in (0, 1)] for i in (0, 1)] for b in (0, 1)] for a in (0, 1)]
)


def _per_qubit(x: np.ndarray, kernel: np.ndarray) -> np.ndarray:
    """Apply a 2x2 -> 2x2 linear map to every qubit's (row bit, col bit) pair."""
    side = x.shape[0]
    n = qubits_for_side(side)
    t = np.asarray(x, dtype=complex).reshape((2,) * (2 * n))
    for q in range(n):
        t = np.tensordot(kernel, t, axes=([2, 3], [q, n + q]))
        # new axes 0, 1 belong at positions q and n + q
        t = np.moveaxis(t, [0, 1], [q, n + q])
    return t.reshape(side, side)


def u_map(x: np.ndarray) -> np.ndarray:
    """Linear map ``x -> [tr(x P_ij)]`` on any square matrix (complex output)."""
    x = np.asarray(x)
    if x.ndim != 2 or x.shape[0] != x.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {x.shape}")
    return _per_qubit(x, _TO_REAL_KERNEL)


def u_inv_map(s: np.ndarray) -> np.ndarray:
    """Inverse of ``u_map``: ``2**-n sum_ij s_ij P_ij``."""
    s = np.asarray(s)
    if s.ndim != 2 or s.shape[0] != s.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {s.shape}")
    return _per_qubit(s, _TO_HERM_KERNEL)


def q_power(n: int) -> np.ndarray:
    """n-fold Kronecker power of ``Q = [[1, -i], [1, 1]]``."""
    check_qubits(n)
    out = np.ones((1, 1), dtype=complex)
    for _ in range(n):
        out = np.kron(out, Q)
    return out


def u_map_opsum(x: np.ndarray) -> np.ndarray:
    """Same map as ``u_map`` via the Hadamard operator sum
    ``Q^(n) (.) sum_m P_m0 x P_M,(M-m)``. Quadratic in the dimension; used as
    an independent cross-check."""
    x = np.asarray(x, dtype=complex)
    n = qubits_for_side(x.shape[0])
    top = 2**n - 1
    acc = np.zeros_like(x)
    for m in range(top + 1):
        acc += pauli(m, 0, n) @ x @ pauli(top, top - m, n)
    return q_power(n) * acc


def u_inv_map_opsum(s: np.ndarray) -> np.ndarray:
    """Inverse operator sum ``2**-n sum_m P_m0 (conj(Q^(n)) (.) s) P_M,(M-m)``."""
    s = np.asarray(s, dtype=complex)
    n = qubits_for_side(s.shape[0])
    top = 2**n - 1
    inner = q_power(n).conj() * s
    acc = np.zeros_like(inner)
    for m in range(top + 1):
        acc += pauli(m, 0, n) @ inner @ pauli(top, top - m, n)
    return acc / 2**n


def strip_imag(x: np.ndarray, tol: float = IMAG_TOL, what: str = "result") -> np.ndarray:
    """Return ``x.real`` after checking the imaginary residue is at most ``tol``."""
    x = np.asarray(x)
    if np.iscomplexobj(x):
        resid = np.max(np.abs(x.imag), initial=0.0)
        if resid > tol:
            raise ValidationError("real", f"{what} has imaginary residue {resid:.3e} > {tol:g}")
        return np.ascontiguousarray(x.real)
    return np.asarray(x, dtype=float)


def validate_hermitian(rho: np.ndarray, tol: float = HERMITIAN_TOL) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValidationError("shape", f"expected a square matrix, got {rho.shape}")
    qubits_for_side(rho.shape[0])
    if not np.all(np.isfinite(rho)):
        raise ValidationError("finite", "matrix has non-finite entries")
    err = np.max(np.abs(rho - rho.conj().T))
    if err > tol:
        raise ValidationError("hermitian", f"deviation from Hermiticity {err:.3e} > {tol:g}")
    return rho


def validate_hermitian_density(rho: np.ndarray, *, positive: bool = False) -> np.ndarray:
    """Check Hermiticity and unit trace; positivity only when asked."""
    rho = validate_hermitian(rho)
    tr = np.trace(rho)
    if abs(tr - 1) > TRACE_TOL:
        raise ValidationError("trace", f"trace is {tr.real:.12g}, expected 1")
    if positive:
        check_positive(rho)
    return rho


def check_positive(rho: np.ndarray, tol: float = 1e-8) -> None:
    lo = np.linalg.eigvalsh((rho + rho.conj().T) / 2).min()
    if lo < -tol:
        raise ValidationError("positive", f"smallest eigenvalue {lo:.3e} < -{tol:g}")


def validate_real_density(sigma: np.ndarray) -> np.ndarray:
    sigma = np.asarray(sigma)
    if sigma.ndim != 2 or sigma.shape[0] != sigma.shape[1]:
        raise ValidationError("shape", f"expected a square matrix, got {sigma.shape}")
    qubits_for_side(sigma.shape[0])
    sigma = strip_imag(sigma, what="real density matrix")
    if not np.all(np.isfinite(sigma)):
        raise ValidationError("finite", "matrix has non-finite entries")
    if abs(sigma[0, 0] - 1) > CORNER_TOL:
        raise ValidationError("σ00", f"corner entry is {sigma[0, 0]:.12g}, expected 1")
    return sigma


def to_real(rho: np.ndarray) -> np.ndarray:
    """Real density matrix ``sigma[i, j] = tr(rho P_ij)`` of a Hermitian density matrix."""
    rho = validate_hermitian_density(rho)
    sigma = strip_imag(u_map(rho), what="real density matrix")
    if abs(sigma[0, 0] - 1) <= CORNER_TOL:
        sigma[0, 0] = 1.0
    return sigma


def to_hermitian(sigma: np.ndarray) -> np.ndarray:
    """Hermitian density matrix ``2**-n sum_ij sigma_ij P_ij``."""
    sigma = validate_real_density(sigma)
    rho = u_inv_map(sigma)
    return (rho + rho.conj().T) / 2


def real_observable(mu: np.ndarray) -> np.ndarray:
    """Real matrix of a Hermitian observable (no trace condition)."""
    return strip_imag(u_map(validate_hermitian(mu)), what="observable")


def hermitian_observable(nu: np.ndarray) -> np.ndarray:
    nu = np.asarray(nu, dtype=float)
    mu = u_inv_map(nu)
    return (mu + mu.conj().T) / 2


# --- superoperators -------------------------------------------------------


@dataclass(frozen=True)
class Superop:
    """Propagating matrix acting on ``vec(rho)`` (hermitian domain) or
    ``vec(sigma)`` (real domain)."""

    mat: np.ndarray
    domain: Literal["hermitian", "real"] = "hermitian"

    def __post_init__(self):
        if self.domain not in ("hermitian", "real"):
            raise DomainError(f"unknown superoperator domain {self.domain!r}")
        m = np.asarray(self.mat)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DomainError(f"superoperator must be square, got {m.shape}")
        superop_qubits(m.shape[0])

    @property
    def n(self) -> int:
        return superop_qubits(np.asarray(self.mat).shape[0])

    def apply(self, x: np.ndarray) -> np.ndarray:
        d = 2**self.n
        return unvec(self.mat @ vec(x), d)


def _as_superop(s, domain: str) -> Superop:
    if isinstance(s, Superop):
        if s.domain != domain:
            raise DomainError(f"expected a {domain}-domain superoperator, got {s.domain}-domain")
        return s
    return Superop(np.asarray(s), domain)


def unitary_superop(u: np.ndarray) -> Superop:
    """Propagator ``conj(U) (x) U`` of ``rho -> U rho U^dagger``."""
    u = np.asarray(u, dtype=complex)
    return Superop(np.kron(u.conj(), u), "hermitian")


def _u_sandwich(n: int) -> np.ndarray:
    """``sum_m P_M,(M-m) (x) P_m0``."""
    top = 2**n - 1
    return sum(kron(pauli(top, top - m, n), pauli(m, 0, n)) for m in range(top + 1))


def superop_to_real(s) -> Superop:
    """Translate a Hermitian-domain propagator into the real domain:
    ``2**-n Qd A S A conj(Qd)`` with ``Qd = Diag(vec(Q^(n)))`` and
    ``A = sum_m P_M,(M-m) (x) P_m0``."""
    s = _as_superop(s, "hermitian")
    n = s.n
    qd = vec(q_power(n))
    a = _u_sandwich(n)
    t = a @ np.asarray(s.mat, dtype=complex) @ a
    t = qd[:, None] * t * qd.conj()[None, :] / 2**n
    return Superop(strip_imag(t, what="real-domain superoperator"), "real")


def superop_to_hermitian(t) -> Superop:
    """Inverse of ``superop_to_real``."""
    t = _as_superop(t, "real")
    n = t.n
    qd = vec(q_power(n))
    a = _u_sandwich(n)
    inner = qd.conj()[:, None] * np.asarray(t.mat, dtype=complex) * qd[None, :]
    return Superop(a @ inner @ a / 2**n, "hermitian")


def real_superop_to_choi_pauli(t) -> np.ndarray:
    """Hermitian-domain Choi matrix recovered from a real-domain propagator.

    ``2**-n Choi(S) = 2**-2n sum_{ijkl} q_ij t^{ij}_{kl} P_ij (x) P_kl`` where
    ``q = Q^(n) (.) Q^(n)`` and ``t^{ij}_{kl}`` are the entries of ``T`` in
    the ``E_lj (x) E_ki`` basis. The ``q`` weights multiply the coefficients;
    they cannot be pulled out as a Hadamard factor of the Pauli sum.
    Returns ``Choi(S)``.
    """
    t = _as_superop(t, "real")
    n = t.n
    d = 2**n
    coeffs = choi_reshuffle(np.asarray(t.mat, dtype=complex))  # [(i,k),(j,l)] -> t^{ij}_{kl}
    mask = np.kron(q_power(n) * q_power(n), np.ones((d, d)))
    # u_inv_map on 2n qubits is 2**-2n sum c_IJ P_IJ, and P_(ik),(jl) = P_ij (x) P_kl
    return d * u_inv_map(mask * coeffs)


# --- operator sums --------------------------------------------------------


@dataclass(frozen=True)
class OperatorSum:
    """``X -> sum_k c_k A_k X B_k``."""

    terms: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple((complex(c), np.asarray(a), np.asarray(b)) for c, a, b in self.terms))

    def apply(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x)
        out = np.zeros(x.shape, dtype=complex)
        for c, a, b in self.terms:
            out += c * (a @ x @ b)
        return out

    def superop(self) -> np.ndarray:
        return sum(c * np.kron(b.T, a) for c, a, b in self.terms)

    @property
    def coefficients(self) -> np.ndarray:
        return np.array([c for c, _, _ in self.terms])

    def __len__(self):
        return len(self.terms)


def opsum_from_choi(choi: np.ndarray, cutoff: float = SVD_CUTOFF) -> OperatorSum:
    """Operator sum from the singular value decomposition of a Choi matrix.

    Each singular triple ``(s, u, v)`` gives the term
    ``(s / 2**n) * A X B`` with ``A = sqrt(2**n) unvec(u)`` and
    ``B = sqrt(2**n) unvec(v)^dagger``, so that unitary-like operators come
    out with Hilbert-Schmidt norm ``sqrt(2**n)`` (e.g. Pauli products).
    """
    choi = np.asarray(choi, dtype=complex)
    if choi.ndim != 2 or choi.shape[0] != choi.shape[1]:
        raise DomainError(f"Choi matrix must be square, got {choi.shape}")
    d = 2 ** superop_qubits(choi.shape[0])
    u, s, vh = np.linalg.svd(choi)
    terms = []
    for k in np.flatnonzero(s >= cutoff):
        left = np.sqrt(d) * unvec(u[:, k], d)
        right = np.sqrt(d) * unvec(vh[k].conj(), d).conj().T
        terms.append((s[k] / d, left, right))
    return OperatorSum(tuple(terms))


def opsum_choi(ops: OperatorSum) -> np.ndarray:
    """Choi matrix of an operator sum (reshuffled propagator)."""
    return choi_reshuffle(ops.superop())


__all__ = [
    "HERMITIAN_TOL",
    "MAX_SUPEROP_QUBITS",
    "OperatorSum",
    "Q",
    "Superop",
    "ValidationError",
    "check_positive",
    "hermitian_observable",
    "opsum_choi",
    "opsum_from_choi",
    "q_power",
    "real_observable",
    "real_superop_to_choi_pauli",
    "strip_imag",
    "superop_to_hermitian",
    "superop_to_real",
    "to_hermitian",
    "to_real",
    "u_inv_map",
    "u_inv_map_opsum",
    "u_map",
    "u_map_opsum",
    "unitary_superop",
    "validate_hermitian",
    "validate_hermitian_density",
    "validate_real_density",
]
