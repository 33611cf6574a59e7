import numpy as np
import pytest

from boundaryq.fermionic import full_boundary_fermionic, full_boundary_recurrence, hermitian_boundary
from boundaryq.pauli import anticommutes, to_dense, to_sparse
from boundaryq.simplicial import full_boundary_oracle

from reference_matrices import D1, D2, D3
from oracles import q_dense


def test_single_mode():
    d = full_boundary_fermionic(1)
    assert [(c, s.word) for c, s in d.terms] == [(0.5, "X"), (0.5j, "Y")]
    assert np.array_equal(to_dense(d), D1)


@pytest.mark.parametrize("n,expected", [(2, D2), (3, D3)])
def test_reference_matrices(n, expected):
    assert np.array_equal(to_dense(full_boundary_fermionic(n)), expected)
    assert np.array_equal(full_boundary_recurrence(n).toarray(), expected)


@pytest.mark.parametrize("n", range(1, 11))
def test_term_count(n):
    assert len(full_boundary_fermionic(n)) == 2 * n
    assert len(hermitian_boundary(n)) == n


@pytest.mark.parametrize("n", range(1, 11))
def test_three_constructions_agree(n):
    oracle = full_boundary_oracle(n)
    for other in (to_sparse(full_boundary_fermionic(n)), full_boundary_recurrence(n)):
        diff = other - oracle
        diff.eliminate_zeros()
        assert diff.nnz == 0


def test_recurrence_base_case():
    assert np.array_equal(full_boundary_recurrence(1).toarray(), D1)


def test_hermitian_single_qubit():
    b = hermitian_boundary(1)
    assert [(c, s.word) for c, s in b.terms] == [(1.0, "X")]
    assert np.array_equal(to_dense(b), [[0, 1], [1, 0]])


@pytest.mark.parametrize("n", range(1, 7))
def test_hermitian_terms_are_q_strings(n):
    for i, (c, s) in enumerate(hermitian_boundary(n).terms):
        assert c == 1
        assert np.array_equal(to_dense(s), q_dense(i, n))


@pytest.mark.parametrize("n", range(1, 11))
def test_hermitian_is_d_plus_dagger_and_squares_to_n(n):
    b = to_sparse(hermitian_boundary(n))
    d = to_sparse(full_boundary_fermionic(n))
    diff = b - (d + d.conj().T)
    diff.eliminate_zeros()
    assert diff.nnz == 0
    assert np.array_equal((b @ b).toarray(), n * np.eye(2**n))


@pytest.mark.parametrize("n", range(1, 7))
def test_spectrum(n):
    b = to_dense(hermitian_boundary(n))
    assert np.trace(b) == 0
    eig = np.linalg.eigvalsh(b)
    half = 2 ** (n - 1)
    assert np.allclose(eig[:half], -np.sqrt(n))
    assert np.allclose(eig[half:], np.sqrt(n))


@pytest.mark.parametrize("n", range(2, 9))
def test_terms_pairwise_anticommute(n):
    strings = [s for _, s in hermitian_boundary(n).terms]
    for i in range(n):
        for j in range(i):
            assert anticommutes(strings[i], strings[j])
