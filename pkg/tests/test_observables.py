import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import SEEDS, hermitian_ptrace, rand_density, rand_hermitian, rand_pure
from realdm.observables import ObservablePair, expect, partial_trace, partial_trace_indices, purity
from realdm.tensor_core import DomainError, pauli
from realdm.xform import ValidationError, to_real

BELL_SIGMA = np.array([[1.0, 0, 0, -1], [0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 1]])


def test_purity_examples():
    assert purity(np.array([[1.0, 0], [0, 0]])) == 0.5
    assert purity(np.array([[1.0, 0], [1, 0]])) == 1.0
    assert purity(BELL_SIGMA) == 1.0


@given(SEEDS, st.integers(1, 4))
@settings(max_examples=40)
def test_purity_identity(seed, n):
    rng = np.random.default_rng(seed)
    rho = rand_density(rng, n)
    assert np.isclose(purity(to_real(rho)), np.trace(rho @ rho).real, atol=1e-12)
    assert abs(purity(to_real(rand_pure(rng, n))) - 1) < 1e-12


def test_expect_examples():
    zero = np.array([[1.0, 0], [0, 1]])
    obs = ObservablePair(pauli(1, 1, 1))
    assert np.array_equal(obs.nu, [[0, 0], [0, 2]])
    assert expect(obs, zero) == 1.0
    assert expect(np.eye(2), np.array([[1.0, 0.3], [-0.2, 0.1]])) == 1.0
    assert expect(pauli(1, 0, 1), zero) == 0.0


@given(SEEDS, st.integers(1, 3))
@settings(max_examples=40)
def test_expect_identity(seed, n):
    rng = np.random.default_rng(seed)
    mu, rho = rand_hermitian(rng, 2**n), rand_density(rng, n)
    assert np.isclose(expect(ObservablePair(mu), to_real(rho)), np.trace(mu @ rho).real, atol=1e-12)


def test_expect_errors():
    with pytest.raises(DomainError):
        expect(pauli(1, 1, 2), np.eye(2))
    with pytest.raises(ValidationError):
        ObservablePair(np.array([[0, 1], [0, 0]]))


def test_partial_trace_examples():
    rng = np.random.default_rng(0)
    s1, s2 = to_real(rand_density(rng, 1)), to_real(rand_density(rng, 1))
    assert np.allclose(partial_trace(np.kron(s1, s2), [1]), s1)
    assert np.allclose(partial_trace(np.kron(s1, s2), [2]), s2)
    assert np.array_equal(partial_trace(BELL_SIGMA, [1]), [[1, 0], [0, 0]])
    assert np.array_equal(partial_trace(BELL_SIGMA, [1, 2]), BELL_SIGMA)


@pytest.mark.parametrize("n", [2, 3])
def test_partial_trace_matches_hermitian(n):
    rng = np.random.default_rng(n)
    for _ in range(20):
        rho = rand_density(rng, n)
        sigma = to_real(rho)
        for drop in range(1, n + 1):
            keep = [q for q in range(1, n + 1) if q != drop]
            got = partial_trace(sigma, keep)
            assert got[0, 0] == 1.0
            assert np.allclose(got, to_real(hermitian_ptrace(rho, drop, n)), atol=1e-12)


def test_partial_trace_indices():
    assert list(partial_trace_indices(3, [1, 3])) == [0, 1, 4, 5]
    assert list(partial_trace_indices(3, [2])) == [0, 2]
    for bad in ([], [0], [4]):
        with pytest.raises(DomainError):
            partial_trace_indices(3, bad)
