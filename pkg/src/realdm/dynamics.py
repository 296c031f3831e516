"""Hamiltonian dynamics carried out directly on real density matrices.

Bracket convention: the real commutator of sigma with a generator nu is the
real matrix ``[[sigma, nu]] = U(-i [rho, mu])`` with ``rho = U^-1(sigma)``,
``mu = U^-1(nu)``. For one qubit its entries are the components of the cross
product ``s x n`` of the Bloch-like vectors ``s = (s10, s01, s11)`` and
``n = (n10, n01, n11)``, placed at positions (1,0), (0,1), (1,1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .tensor_core import DomainError, kron, unvec, vec
from .xform import hermitian_observable, strip_imag, u_map

E00 = np.array([[1.0, 0.0], [0.0, 0.0]])


def _vec3(m: np.ndarray) -> np.ndarray:
    return np.array([m[1, 0], m[0, 1], m[1, 1]], dtype=float)


def _mat3(v, corner: float = 0.0) -> np.ndarray:
    return np.array([[corner, v[1]], [v[0], v[2]]], dtype=float)


def _check_1q(m, what: str) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.shape != (2, 2):
        raise DomainError(f"{what} must be 2x2, got shape {m.shape}")
    return m


@dataclass(frozen=True, eq=False)
class RotationGenerator:
    """Real single-qubit generator with zero corner entry."""

    nu: np.ndarray

    def __post_init__(self):
        nu = _check_1q(self.nu, "generator")
        if nu[0, 0] != 0:
            raise DomainError(f"generator must have nu00 == 0, got {nu[0, 0]!r}")
        object.__setattr__(self, "nu", nu)

    @classmethod
    def from_vector(cls, x: float, y: float, z: float) -> RotationGenerator:
        """Generator with (nu10, nu01, nu11) = (x, y, z)."""
        return cls(_mat3((x, y, z)))

    @classmethod
    def from_hermitian(cls, mu: np.ndarray) -> RotationGenerator:
        """Real form of a 2x2 Hamiltonian; the identity part is dropped."""
        nu = strip_imag(u_map(np.asarray(mu, dtype=complex)), what="generator")
        nu[0, 0] = 0.0
        return cls(nu)

    @property
    def norm(self) -> float:
        return float(np.sqrt(np.sum(self.nu * self.nu)))

    @property
    def unit(self) -> RotationGenerator:
        nrm = self.norm
        if nrm == 0:
            raise DomainError("zero generator has no direction")
        return RotationGenerator(self.nu / nrm)

    @property
    def vector(self) -> np.ndarray:
        return _vec3(self.nu)

    def hamiltonian(self) -> np.ndarray:
        return hermitian_observable(self.nu)


def as_generator(nu) -> RotationGenerator:
    return nu if isinstance(nu, RotationGenerator) else RotationGenerator(np.asarray(nu, dtype=float))


def inner(a: np.ndarray, b: np.ndarray) -> float:
    """Hilbert-Schmidt inner product ``tr(a^T b)`` of real matrices."""
    return float(np.sum(np.asarray(a) * np.asarray(b)))


def commutator_real_1q(sigma: np.ndarray, nu) -> np.ndarray:
    """Real commutator ``[[sigma, nu]]`` of a one-qubit matrix with a generator."""
    s = _check_1q(sigma, "sigma")
    v = as_generator(nu).nu
    return np.array(
        [
            [0.0, s[1, 1] * v[1, 0] - s[1, 0] * v[1, 1]],
            [s[0, 1] * v[1, 1] - s[1, 1] * v[0, 1], s[1, 0] * v[0, 1] - s[0, 1] * v[1, 0]],
        ]
    )


def rotation_superop(nu) -> np.ndarray:
    """4x4 matrix R_nu with ``R_nu vec(sigma) = vec(n x s)``."""
    x, y, z = as_generator(nu).vector
    return np.array(
        [
            [0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, -z, y],
            [0.0, z, 0.0, -x],
            [0.0, -y, x, 0.0],
        ]
    )


def s_superop(nu) -> np.ndarray:
    """4x4 matrix S_nu with ``S_nu vec(sigma) = <nu|sigma> vec(E00) + vec(nu)``."""
    x, y, z = as_generator(nu).vector
    out = np.zeros((4, 4))
    out[0, 1:] = (x, y, z)
    out[1:, 0] = (x, y, z)
    return out


def evolve_1q(sigma0: np.ndarray, nu, t: float) -> np.ndarray:
    """Closed-form evolution of a single qubit under generator ``nu``.

    Matches ``rho(t) = exp(-i mu t/2) rho exp(i mu t/2)``; the Bloch vector
    turns about ``nu`` by the angle ``|nu| t / 2``.
    """
    s0 = _check_1q(sigma0, "sigma0")
    gen = as_generator(nu)
    nrm = gen.norm
    if nrm == 0:
        return s0.copy()
    r = rotation_superop(gen)
    ang = nrm * t / 2
    prop = np.eye(4) + np.sin(ang) / nrm * r + (1 - np.cos(ang)) / nrm**2 * (r @ r)
    return unvec(prop @ vec(s0), 2)


def evolve_1q_geometric(sigma0: np.ndarray, nu, t: float) -> np.ndarray:
    """Same rotation written with projections and cross products:
    ``(n.v) n + sin(a) n x v - cos(a) n x (n x v)`` for ``v`` the traceless part."""
    s0 = _check_1q(sigma0, "sigma0")
    gen = as_generator(nu)
    if gen.norm == 0:
        return s0.copy()
    n = gen.unit.vector
    v = _vec3(s0)
    ang = gen.norm * t / 2
    nxv = np.cross(n, v)
    out = np.dot(n, v) * n + np.sin(ang) * nxv - np.cos(ang) * np.cross(n, nxv)
    return _mat3(out, corner=s0[0, 0])


def double_commutator_1q(a: np.ndarray, b) -> np.ndarray:
    """``a |b|^2 - <a|b> b`` on the traceless part of ``a``; this is
    ``U([[A, B], B])`` in the Hermitian domain."""
    a = _check_1q(a, "a").copy()
    a[0, 0] = 0.0
    gen = as_generator(b)
    return a * gen.norm**2 - inner(a, gen.nu) * gen.nu


def _traceless(m: np.ndarray) -> np.ndarray:
    out = np.array(m, dtype=float)
    out[0, 0] = 0.0
    return out


def commutator_real_biaxial(a: np.ndarray, c: np.ndarray, b, d) -> np.ndarray:
    """Real commutator ``[[a (x) c, b (x) d]]`` for one-qubit ``a``, ``c`` with
    unit corner and generators ``b``, ``d``; a 4x4 matrix.

    Expands into ``1/2 <a0|b> E00 (x) [[c,d]] + 1/2 [[a,b]] (x) E00 <c0|d>
    + 1/2 b (x) [[c,d]] + 1/2 [[a,b]] (x) d`` with ``a0``, ``c0`` traceless parts.
    """
    a = _check_1q(a, "a")
    c = _check_1q(c, "c")
    bg, dg = as_generator(b), as_generator(d)
    a0, c0 = _traceless(a), _traceless(c)
    ab = commutator_real_1q(a0, bg)
    cd = commutator_real_1q(c0, dg)
    return 0.5 * (
        inner(a0, bg.nu) * kron(E00, cd)
        + inner(c0, dg.nu) * kron(ab, E00)
        + kron(bg.nu, cd)
        + kron(ab, dg.nu)
    )


def double_commutator_biaxial(sig1: np.ndarray, sig2: np.ndarray, nu1, nu2) -> np.ndarray:
    """Rejection of each traceless part from its unit axis, tensored with the
    other's projection plus the scalar part, summed both ways.

    Equals ``4 U([[rho, N], N])`` with ``N = U^-1(nu1_hat (x) nu2_hat)``.
    """
    s1 = _traceless(_check_1q(sig1, "sig1"))
    s2 = _traceless(_check_1q(sig2, "sig2"))
    n1 = as_generator(nu1).unit.nu
    n2 = as_generator(nu2).unit.nu
    proj1 = inner(s1, n1) * n1
    proj2 = inner(s2, n2) * n2
    return kron(s1 - proj1, proj2 + E00) + kron(proj1 + E00, s2 - proj2)


def biaxial_phase(nu1, nu2, t: float) -> float:
    """Rotation angle of the two-qubit closed form after time ``t``."""
    return as_generator(nu1).norm * as_generator(nu2).norm * t / 8


def evolve_biaxial(sig1: np.ndarray, sig2: np.ndarray, nu1, nu2, t: float) -> np.ndarray:
    """Evolve the product ``sig1 (x) sig2`` under the bi-axial Hamiltonian
    ``mu1 (x) mu2``, i.e. ``rho(t) = exp(-i (mu1 (x) mu2) t/4) rho exp(+...)``.

    With ``phi = |nu1| |nu2| t / 8`` the result is
    ``sig1 (x) sig2 - 2 sin(phi) [[., n1 (x) n2]] - (1 - cos(phi)) DC`` where
    ``DC`` is ``double_commutator_biaxial``.
    """
    g1, g2 = as_generator(nu1), as_generator(nu2)
    if g1.norm == 0 or g2.norm == 0:
        raise DomainError("bi-axial evolution needs nonzero generators")
    s1 = _check_1q(sig1, "sig1")
    s2 = _check_1q(sig2, "sig2")
    phi = biaxial_phase(g1, g2, t)
    u1, u2 = g1.unit, g2.unit
    return (
        kron(s1, s2)
        - 2 * np.sin(phi) * commutator_real_biaxial(s1, s2, u1, u2)
        - (1 - np.cos(phi)) * double_commutator_biaxial(s1, s2, u1, u2)
    )
