"""Quantum channels on real density matrices: axis rotations, Ising coupling
and T1/T2 relaxation, mostly written with Hadamard (entrywise) products."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Literal

import numpy as np

from .tensor_core import DomainError, pauli, qubits_for_side
from .xform import OperatorSum, strip_imag, validate_real_density

FLIP = np.array([[0.0, 1.0], [1.0, 0.0]])
P30 = np.fliplr(np.eye(4))  # sigma_1 (x) sigma_1 reverses row or column order
P03 = np.array([[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]], dtype=float)

# -T2 d(sigma)/dt = CORR_DIRECT (.) sigma + CORR_CROSS (.) (P30 sigma P30)
CORR_DIRECT = np.array([[0, 1, 1, 2], [1, 0, 2, 1], [1, 2, 0, 1], [2, 1, 1, 0]], dtype=float)
CORR_CROSS = 2 * P03


def _rot2(c: float, s: float) -> np.ndarray:
    return np.array([[c, -s], [s, c]])


def rot_opsum(axis: Literal["x", "y", "z"], theta: float) -> OperatorSum:
    """Operator sum for ``exp(-i theta/2 sigma_axis)`` acting on a real
    one-qubit density matrix."""
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    eye = np.eye(2)
    zdiag = np.diag([1.0, -1.0])
    if axis == "x":
        terms = [(c, _rot2(c, s), eye), (s, np.array([[s, c], [-c, s]]), zdiag)]
    elif axis == "y":
        terms = [(c, eye, _rot2(c, s)), (s, zdiag, np.array([[s, c], [-c, s]]))]
    elif axis == "z":
        p10, p01, p11 = pauli(1, 0, 1), pauli(0, 1, 1), pauli(1, 1, 1)
        terms = [
            (c * c, eye, eye),
            (s * s, p11, p11),
            (1j * c * s, p10, p01),
            (1j * c * s, p01, p10),
        ]
    else:
        raise DomainError(f"axis must be 'x', 'y' or 'z', got {axis!r}")
    return OperatorSum(tuple(terms))


def apply_rotation(axis: str, theta: float, sigma: np.ndarray) -> np.ndarray:
    sigma = np.asarray(sigma, dtype=float)
    if sigma.shape != (2, 2):
        raise DomainError(f"rotations act on one qubit, got shape {sigma.shape}")
    return strip_imag(rot_opsum(axis, theta).apply(sigma), what="rotated state")


def rot_z_hadamard(theta: float, sigma: np.ndarray) -> np.ndarray:
    """z rotation as ``C (.) sigma + F (S (.) sigma) F`` with F the 2x2 flip."""
    sigma = np.asarray(sigma, dtype=float)
    if sigma.shape != (2, 2):
        raise DomainError(f"rotations act on one qubit, got shape {sigma.shape}")
    c, s = np.cos(theta), np.sin(theta)
    cos_part = np.array([[1.0, c], [c, 1.0]])
    sin_part = np.array([[0.0, -s], [s, 0.0]])
    return cos_part * sigma + FLIP @ (sin_part * sigma) @ FLIP


@dataclass(frozen=True, eq=False)
class IsingFactors:
    J: float
    t: float
    C: np.ndarray
    S: np.ndarray


def ising_factors(J: float, t: float) -> IsingFactors:
    """Cosine and signed-sine patterns of the ``sigma3 (x) sigma3`` propagator."""
    c, s = np.cos(np.pi * J * t), np.sin(np.pi * J * t)
    cmat = np.array([[1, c, c, 1], [c, 1, 1, c], [c, 1, 1, c], [1, c, c, 1]], dtype=float)
    smat = np.array([[0, s, s, 0], [s, 0, 0, -s], [s, 0, 0, -s], [0, -s, -s, 0]], dtype=float)
    return IsingFactors(J, t, cmat, smat)


def ising_apply(sigma: np.ndarray, J: float, t: float) -> np.ndarray:
    """Weak scalar coupling ``exp(-i P33 pi J t/2)`` on a two-qubit real
    density matrix: ``C (.) sigma - S (.) (P03 sigma P30)``.

    The left factor ``P03`` is ``P30`` with rows 0 and 3 negated, which is what
    makes the sine pattern of ``ising_factors`` agree with the propagator.
    """
    sigma = np.asarray(sigma, dtype=float)
    if sigma.shape != (4, 4):
        raise DomainError(f"Ising coupling acts on two qubits, got shape {sigma.shape}")
    f = ising_factors(J, t)
    return f.C * sigma - f.S * (P03 @ sigma @ P30)


def hadamard_exp(m: np.ndarray, t: float) -> np.ndarray:
    """Entrywise ``exp(-t m)``."""
    return np.exp(-t * np.asarray(m, dtype=float))


# --- relaxation -----------------------------------------------------------


@dataclass(frozen=True)
class RelaxationSpec:
    """Per-qubit T1 and T2 time constants.

    In correlated mode only ``T2`` matters: two qubits sharing one T2.
    """

    T1: tuple = ()
    T2: tuple = ()
    correlated: bool = False

    def __post_init__(self):
        t1 = tuple(float(x) for x in np.atleast_1d(self.T1))
        t2 = tuple(float(x) for x in np.atleast_1d(self.T2))
        object.__setattr__(self, "T1", t1)
        object.__setattr__(self, "T2", t2)
        if any(not (x > 0) for x in t1 + t2):
            raise DomainError("relaxation time constants must be positive")
        if self.correlated:
            if len(set(t2)) != 1:
                raise DomainError("correlated relaxation needs a single shared T2")
        elif len(t1) != len(t2):
            raise DomainError(f"got {len(t1)} T1 values and {len(t2)} T2 values")

    @property
    def qubits(self) -> int:
        return 2 if self.correlated else len(self.T1)


def rate_matrix_1q(t1: float, t2: float) -> np.ndarray:
    return np.array([[0.0, 1 / t2], [1 / t2, 1 / t1]])


def composite_rate_matrix(spec: RelaxationSpec) -> np.ndarray:
    """``sum_k 11^T (x) ... (x) R_k (x) ... (x) 11^T`` for uncorrelated qubits."""
    if spec.correlated:
        raise DomainError("composite rate matrix is for uncorrelated relaxation")
    n = spec.qubits
    ones = np.ones((2, 2))
    total = np.zeros((2**n, 2**n))
    for k, (t1, t2) in enumerate(zip(spec.T1, spec.T2)):
        factors = [ones] * n
        factors[k] = rate_matrix_1q(t1, t2)
        total += reduce(np.kron, factors)
    return total


def relax_uncorrelated(
    sigma: np.ndarray, spec: RelaxationSpec, t: float, equilibrium: np.ndarray | None = None
) -> np.ndarray:
    """Independent T1/T2 relaxation: ``sigma_eq + Exp(-t R) (.) (sigma - sigma_eq)``.

    ``equilibrium`` defaults to the maximally mixed state, for which the
    update is the plain Hadamard exponential of the composite rate matrix.
    """
    sigma = validate_real_density(sigma)
    n = qubits_for_side(sigma.shape[0])
    if spec.correlated or spec.qubits != n:
        raise DomainError(f"relaxation spec covers {spec.qubits} qubits, state has {n}")
    decay = hadamard_exp(composite_rate_matrix(spec), t)
    if equilibrium is None:
        return decay * sigma
    eq = validate_real_density(equilibrium)
    if eq.shape != sigma.shape:
        raise DomainError("equilibrium state has the wrong size")
    return eq + decay * (sigma - eq)


def correlated_rate_matrix_hermitian(t2: float) -> np.ndarray:
    """Hadamard rate matrix acting on the Hermitian density matrix under
    totally correlated dephasing of two qubits."""
    return np.array([[0, 1, 1, 4], [1, 0, 0, 1], [1, 0, 0, 1], [4, 1, 1, 0]], dtype=float) / t2


def correlated_generator(sigma: np.ndarray, t2: float) -> np.ndarray:
    """Time derivative of a two-qubit real density matrix under correlated T2."""
    sigma = np.asarray(sigma, dtype=float)
    return -(CORR_DIRECT * sigma + CORR_CROSS * (P30 @ sigma @ P30)) / t2


def relax_correlated_2q(sigma: np.ndarray, t2: float, t: float) -> np.ndarray:
    """Totally correlated T2 relaxation of two qubits, integrated in closed form.

    The direct term gives the Hadamard exponential ``D(t)``; the cross term
    mixes each anti-diagonal entry with its mirror through cosh/sinh of
    ``2t/T2``. Zero-quantum combinations ``s12 - s21`` and ``s03 + s30`` are
    left unchanged.
    """
    sigma = np.asarray(sigma, dtype=float)
    if sigma.shape != (4, 4):
        raise DomainError(f"correlated relaxation acts on two qubits, got shape {sigma.shape}")
    if not t2 > 0:
        raise DomainError("T2 must be positive")
    x = 2 * t / t2
    d = hadamard_exp(CORR_DIRECT / t2, t)
    mixed = sigma + (np.cosh(x) - 1) * (P30 * sigma) - np.sinh(x) * (P03 * (P30 @ sigma @ P30))
    return d * mixed
