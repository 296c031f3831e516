"""Random inputs and Hermitian-domain oracles shared by the test modules."""

import numpy as np
from hypothesis import strategies as st
from scipy.linalg import expm

from realdm.dynamics import rotation_superop, s_superop
from realdm.tensor_core import bits, commutation_matrix_22, pauli, unvec, vec

FLOAT = st.floats(-3, 3, allow_nan=False, allow_infinity=False)
SEEDS = st.integers(0, 2**32 - 1)


def rand_density(rng, n, rank=None):
    d = 2**n
    k = d if rank is None else rank
    g = rng.normal(size=(d, k)) + 1j * rng.normal(size=(d, k))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def rand_pure(rng, n):
    return rand_density(rng, n, rank=1)


def rand_hermitian(rng, d):
    g = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    return (g + g.conj().T) / 2


def rand_unitary(rng, d):
    return expm(-1j * rand_hermitian(rng, d))


def trace_oracle(rho):
    """sigma_ij = tr(rho P_ij), computed label by label."""
    d = rho.shape[0]
    n = d.bit_length() - 1
    return np.array([[np.trace(rho @ pauli(i, j, n)) for j in range(d)] for i in range(d)])


def conjugate(u, rho):
    return u @ rho @ u.conj().T


def hermitian_ptrace(rho, drop, n):
    """Trace out qubit ``drop`` (1-based) by explicit index summation."""
    d = 2**n
    keep = [i for i in range(d) if bits(i, n)[drop - 1] == 0]
    flip = 1 << (n - drop)
    out = np.zeros((d // 2, d // 2), dtype=complex)
    for a, i in enumerate(keep):
        for b, j in enumerate(keep):
            out[a, b] = rho[i, j] + rho[i | flip, j | flip]
    return out


def biaxial_route(sig1, sig2, nu1, nu2, t):
    """Superoperator route for the bi-axial propagator: exponentiate
    S1 (x) R2 and R1 (x) S2 (they annihilate each other, hence commute) and
    conjugate by I (x) K22 (x) I to move between vec(a (x) c) and
    vec(a) (x) vec(c)."""
    k4 = np.kron(np.kron(np.eye(2), commutation_matrix_22().real), np.eye(2))
    tau = t / 8
    g = np.kron(s_superop(nu1), rotation_superop(nu2)) * tau
    h = np.kron(rotation_superop(nu1), s_superop(nu2)) * tau
    v = k4 @ expm(g) @ expm(h) @ k4 @ vec(np.kron(sig1, sig2))
    return unvec(v, 4)


def rk4(f, y0, t, steps):
    """Classic fourth-order Runge-Kutta from 0 to t."""
    h = t / steps
    y = np.array(y0, dtype=float)
    for _ in range(steps):
        k1 = f(y)
        k2 = f(y + h / 2 * k1)
        k3 = f(y + h / 2 * k2)
        k4 = f(y + h * k3)
        y = y + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
    return y
