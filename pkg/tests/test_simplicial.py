import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from boundaryq.simplicial import (
    ChainVector,
    SimplexState,
    apply_boundary,
    format_chain,
    format_sparse,
    full_boundary_oracle,
    parity_string,
    parse_chain,
    parse_sparse,
    projector,
    restricted_boundary,
)

from reference_matrices import D1, D2, D3
from oracles import boundary_brute_force


def test_simplex_state_fields():
    s = SimplexState.from_bitstring("101")
    assert (s.n, s.bits, s.k, s.dimension) == (3, 5, 2, 1)
    assert s.vertices == (0, 2)
    assert SimplexState(3, 0).k == 0
    with pytest.raises(ValueError):
        SimplexState(2, 4)


def test_edge_boundary_labels_faces_by_removed_vertex():
    # dropping v0 leaves |010> with sign -1, dropping v1 leaves |001> with sign +1
    out = apply_boundary(ChainVector.basis("011"))
    assert out.amplitudes == {0b001: 1, 0b010: -1}
    d = restricted_boundary(2, 3).toarray()
    assert np.array_equal(d[:, 0b011], D3[:, 0b011])


def test_triangle_boundary_matches_last_column_of_d3():
    out = apply_boundary(ChainVector.basis("111"))
    assert out.amplitudes == {0b011: 1, 0b101: -1, 0b110: 1}
    assert np.array_equal(restricted_boundary(3, 3).toarray()[:, 7], D3[:, 7])


def test_single_vertex_maps_to_empty_simplex():
    out = apply_boundary(ChainVector.basis("001"))
    assert out.amplitudes == {0: 1}
    assert D3[0, 1] == 1


def test_zero_chain():
    assert apply_boundary(ChainVector(4)).is_zero()


def test_restricted_boundary_one_vertex():
    assert np.array_equal(restricted_boundary(1, 1).toarray(), D1)


def test_restricted_boundary_range():
    with pytest.raises(ValueError):
        restricted_boundary(0, 3)
    with pytest.raises(ValueError):
        restricted_boundary(4, 3)


@pytest.mark.parametrize("n,expected", [(1, D1), (2, D2), (3, D3)])
def test_full_boundary_matches_reference_matrices(n, expected):
    m = full_boundary_oracle(n)
    assert m.dtype == np.int64
    assert np.array_equal(m.toarray(), expected)


@pytest.mark.parametrize("n", range(1, 9))
def test_full_boundary_matches_left_counting_definition(n):
    assert np.array_equal(full_boundary_oracle(n).toarray(), boundary_brute_force(n))


@pytest.mark.parametrize("n", range(1, 11))
def test_nilpotent(n):
    d = full_boundary_oracle(n)
    sq = d @ d
    sq.eliminate_zeros()
    assert sq.nnz == 0


@pytest.mark.parametrize("n", range(1, 9))
def test_parity_string_anticommutes(n):
    d, z = full_boundary_oracle(n), parity_string(n)
    acomm = z @ d + d @ z
    acomm.eliminate_zeros()
    assert acomm.nnz == 0


@pytest.mark.parametrize("n", range(1, 9))
def test_grading(n):
    for k in range(1, n + 1):
        d = restricted_boundary(k, n)
        graded = projector(k - 1, n) @ d @ projector(k, n)
        assert (graded != d).nnz == 0


@pytest.mark.parametrize("n", range(2, 11))
def test_block_recurrence(n):
    d = full_boundary_oracle(n).toarray()
    prev = full_boundary_oracle(n - 1).toarray()
    half = 2 ** (n - 1)
    assert np.array_equal(d[:half, :half], prev)
    assert np.array_equal(d[:half, half:], np.eye(half, dtype=np.int64))
    assert not d[half:, :half].any()
    assert np.array_equal(d[half:, half:], -prev)


def test_projector_ends():
    n = 4
    p0 = projector(0, n).toarray()
    pn = projector(n, n).toarray()
    assert p0[0, 0] == 1 and p0.sum() == 1
    assert pn[-1, -1] == 1 and pn.sum() == 1


@pytest.mark.parametrize("n", range(1, 11))
def test_projectors_resolve_identity(n):
    total = sum(projector(k, n) for k in range(n + 1))
    assert np.array_equal(total.toarray(), np.eye(2**n, dtype=np.int64))


@given(st.integers(1, 10).flatmap(
    lambda n: st.tuples(st.just(n), st.dictionaries(st.integers(0, 2**n - 1), st.integers(-5, 5), max_size=20))))
@settings(max_examples=60, deadline=None)
def test_boundary_of_boundary_vanishes_on_chains(arg):
    n, amps = arg
    chain = ChainVector(n, amps)
    assert apply_boundary(apply_boundary(chain)).is_zero()


@given(st.integers(1, 7).flatmap(
    lambda n: st.tuples(st.just(n), st.dictionaries(st.integers(0, 2**n - 1), st.integers(-5, 5), max_size=20))))
@settings(max_examples=40, deadline=None)
def test_chain_action_matches_matrix(arg):
    n, amps = arg
    chain = ChainVector(n, amps)
    expected = full_boundary_oracle(n) @ chain.to_vector()
    assert np.array_equal(apply_boundary(chain).to_vector(), expected)


def test_chain_text_round_trip():
    chain = ChainVector(3, {0b011: 1, 0b101: -0.5 + 2j})
    text = format_chain(chain)
    assert text == "1 0 011\n-0.5 2 101\n"
    assert parse_chain(text) == chain


def test_sparse_triples_sorted_by_column():
    text = format_sparse(full_boundary_oracle(2))
    assert text == "# shape 4 4\n0 1 1 0\n0 2 1 0\n1 3 1 0\n2 3 -1 0\n"
    assert np.array_equal(parse_sparse(text).toarray(), D2)
