"""Dense matrix kernel: indexed Pauli/elementary bases, Kronecker and
Hadamard products, columnization and Choi reshuffling.

Qubit 1 sits in the most significant bit of every composite index, so
``P_ij = P_{i_1 j_1} (x) ... (x) P_{i_n j_n}`` with ``i = i_1 i_2 ... i_n``
in binary.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

MAX_STATE_QUBITS = 12
MAX_SUPEROP_QUBITS = 6


class DomainError(ValueError):
    """Argument outside the domain of an operation (bad index, size, shape)."""


# 2x2 generators, keyed by the bit pair (i, j).
_E1 = {
    (i, j): np.array([[1.0 if (r, c) == (i, j) else 0.0 for c in range(2)] for r in range(2)], dtype=complex)
    for i in (0, 1)
    for j in (0, 1)
}
_P1 = {
    (0, 0): np.array([[1, 0], [0, 1]], dtype=complex),
    (1, 0): np.array([[0, 1], [1, 0]], dtype=complex),
    (0, 1): np.array([[0, -1j], [1j, 0]], dtype=complex),
    (1, 1): np.array([[1, 0], [0, -1]], dtype=complex),
}


def check_qubits(n: int, limit: int = MAX_STATE_QUBITS) -> int:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise DomainError(f"qubit count must be a positive integer, got {n!r}")
    if n > limit:
        raise DomainError(f"qubit count {n} exceeds dense-size guard of {limit}")
    return int(n)


def qubits_for_side(side: int, limit: int = MAX_STATE_QUBITS) -> int:
    """Number of qubits n with ``2**n == side``."""
    n = int(side).bit_length() - 1
    if side < 2 or 2**n != side:
        raise DomainError(f"matrix side {side} is not a power of two >= 2")
    return check_qubits(n, limit)


def superop_qubits(side: int) -> int:
    """Number of qubits n with ``4**n == side``."""
    n = (int(side).bit_length() - 1) // 2
    if side < 4 or 4**n != side:
        raise DomainError(f"superoperator side {side} is not a power of four >= 4")
    return check_qubits(n, MAX_SUPEROP_QUBITS)


def bits(i: int, n: int) -> tuple[int, ...]:
    """Binary digits of ``i``, most significant (qubit 1) first."""
    return tuple((i >> (n - 1 - q)) & 1 for q in range(n))


@dataclass(frozen=True)
class BasisLabel:
    kind: Literal["elementary", "pauli"]
    i: int
    j: int
    n: int

    def __post_init__(self):
        if self.kind not in ("elementary", "pauli"):
            raise DomainError(f"unknown basis kind {self.kind!r}")
        check_qubits(self.n)
        top = 2**self.n - 1
        if not (0 <= self.i <= top and 0 <= self.j <= top):
            raise DomainError(f"basis indices ({self.i}, {self.j}) out of range [0, {top}]")


@dataclass(frozen=True)
class PauliProductResult:
    phase_exponent: int
    index_i: int
    index_j: int

    @property
    def phase(self) -> complex:
        return 1j**self.phase_exponent


def basis_matrix(label: BasisLabel) -> np.ndarray:
    """E_ij or P_ij as the n-fold Kronecker product of 2x2 generators."""
    table = _E1 if label.kind == "elementary" else _P1
    out = np.ones((1, 1), dtype=complex)
    for a, b in zip(bits(label.i, label.n), bits(label.j, label.n)):
        out = np.kron(out, table[(a, b)])
    return out


def pauli(i: int, j: int, n: int) -> np.ndarray:
    return basis_matrix(BasisLabel("pauli", i, j, n))


def elementary(i: int, j: int, n: int) -> np.ndarray:
    return basis_matrix(BasisLabel("elementary", i, j, n))


def pauli_product(i: int, j: int, k: int, l: int) -> PauliProductResult:
    """Closed-form product ``P_ij P_kl = i**phase * P_(i+k-2ik),(j+l-2jl)``.

    Integer arithmetic only; the phase exponent is reduced mod 4.
    """
    for v in (i, j, k, l):
        if v not in (0, 1):
            raise DomainError(f"Pauli bit indices must be 0 or 1, got {(i, j, k, l)}")
    phase = ((i * l - j * k) * (1 - 2 * i * j) * (1 - 2 * k * l)) % 4
    return PauliProductResult(phase, i + k - 2 * i * k, j + l - 2 * j * l)


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = np.asarray(a)
    b = np.asarray(b)
    if a.size * b.size > 4**MAX_SUPEROP_QUBITS * 4**MAX_SUPEROP_QUBITS:
        raise DomainError("Kronecker product exceeds the dense-size guard")
    return np.kron(a, b)


def hadamard(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise DomainError(f"Hadamard product needs equal shapes, got {a.shape} and {b.shape}")
    return a * b


def vec(x: np.ndarray) -> np.ndarray:
    """Stack the columns of ``x`` left to right."""
    return np.asarray(x).reshape(-1, order="F")


def unvec(v: np.ndarray, rows: int, cols: int | None = None) -> np.ndarray:
    cols = rows if cols is None else cols
    v = np.asarray(v)
    if v.size != rows * cols:
        raise DomainError(f"cannot unvec length {v.size} into {rows}x{cols}")
    return v.reshape((rows, cols), order="F")


def choi_reshuffle(s: np.ndarray) -> np.ndarray:
    """Swap a propagator matrix into Choi form (and back; it is an involution).

    ``sum s (E_lj (x) E_ki)`` becomes ``sum s (E_ij (x) E_kl)``.
    """
    s = np.asarray(s)
    if s.ndim != 2 or s.shape[0] != s.shape[1]:
        raise DomainError(f"superoperator must be square, got shape {s.shape}")
    d = 2 ** superop_qubits(s.shape[0])
    # rows (l, k), cols (j, i)  ->  rows (i, k), cols (j, l)
    return s.reshape(d, d, d, d).transpose(3, 1, 2, 0).reshape(d * d, d * d)


def commutation_matrix_22() -> np.ndarray:
    """K_22 with ``K_22 vec(X) = vec(X.T)`` for 2x2 X."""
    out = np.zeros((4, 4), dtype=complex)
    for i in (0, 1):
        for j in (0, 1):
            out += np.kron(_E1[(i, j)], _E1[(j, i)])
    return out


def diag_sandwich(a: np.ndarray, x: np.ndarray, b: np.ndarray) -> np.ndarray:
    """``Diag(a) X Diag(b)^dagger`` written as ``(a b^dagger) (.) X``."""
    a = np.asarray(a)
    b = np.asarray(b)
    x = np.asarray(x)
    if x.shape != (a.size, b.size):
        raise DomainError(f"diag_sandwich shape mismatch: {a.size}, {x.shape}, {b.size}")
    return np.outer(a, b.conj()) * x
