import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from boundaryq.circuit import (
    CX,
    Circuit,
    Gate,
    H,
    RZ,
    X,
    compile_pauli_rotation,
    depth_and_counts,
    emit_text,
    gate_counts,
    parse_text,
    pauli_rotation_gates,
    unitary_of,
)
from boundaryq.pauli import PauliString
from boundaryq.unitary_partitioning import analytic_boundary_circuit, rotation_generator

from reference_matrices import R1_N2
from oracles import expm_taylor, kron_word

AXES = "XYZ"


def _two_qubit_word(n, a, b, qa, qb):
    word = ["I"] * n
    word[n - 1 - qa] = a
    word[n - 1 - qb] = b
    return "".join(word)


def test_gate_validation():
    with pytest.raises(ValueError):
        Gate("cx", (1, 1))
    with pytest.raises(ValueError):
        Gate("rz", (0,))
    with pytest.raises(ValueError):
        Gate("h", (0,), 0.1)
    with pytest.raises(ValueError):
        Gate("ccx", (0, 1))
    with pytest.raises(ValueError):
        Circuit(2, (H(2),))


def test_rotation_matches_reference_matrix():
    gates = compile_pauli_rotation(rotation_generator(1, 2), math.pi / 4)
    assert len(gates) == 7
    assert np.abs(unitary_of(Circuit(2, tuple(gates))) - R1_N2).max() <= 1e-12


def test_rotation_zero_angle_is_identity():
    gates = compile_pauli_rotation(PauliString.from_word("YX"), 0.0)
    assert np.abs(unitary_of(Circuit(2, tuple(gates))) - np.eye(4)).max() <= 1e-12


def test_rotation_composed_with_negated_angle():
    p = PauliString.from_word("XIY")
    gates = compile_pauli_rotation(p, 0.9) + compile_pauli_rotation(p, -0.9)
    assert np.abs(unitary_of(Circuit(3, tuple(gates))) - np.eye(8)).max() <= 1e-12


def test_rotation_requires_two_qubit_support():
    with pytest.raises(ValueError):
        compile_pauli_rotation(PauliString.from_word("IX"), 0.1)
    with pytest.raises(ValueError):
        compile_pauli_rotation(PauliString.from_word("XYZ"), 0.1)


@given(
    st.integers(2, 5).flatmap(lambda n: st.tuples(
        st.just(n),
        st.sampled_from(AXES), st.sampled_from(AXES),
        st.lists(st.integers(0, n - 1), min_size=2, max_size=2, unique=True),
        st.floats(-10, 10, allow_nan=False),
    ))
)
@settings(max_examples=80, deadline=None)
def test_compiled_rotation_soundness(arg):
    n, a, b, (qa, qb), theta = arg
    word = _two_qubit_word(n, a, b, qa, qb)
    gates = compile_pauli_rotation(PauliString.from_word(word), theta)
    assert len(gates) <= 7
    expected = expm_taylor(0.5j * theta * kron_word(word))
    assert np.abs(unitary_of(Circuit(n, tuple(gates))) - expected).max() <= 1e-12


@given(st.text(alphabet="IXYZ", min_size=1, max_size=5).filter(lambda w: set(w) != {"I"}),
       st.floats(-6, 6, allow_nan=False), st.booleans())
@settings(max_examples=60, deadline=None)
def test_general_rotation_soundness(word, theta, negative):
    p = PauliString.from_word(word)
    if negative:
        p = p.with_phase(2)
    gates = pauli_rotation_gates(p, theta)
    sign = -1 if negative else 1
    expected = expm_taylor(0.5j * theta * sign * kron_word(word))
    assert np.abs(unitary_of(Circuit(len(word), tuple(gates))) - expected).max() <= 1e-12


def test_unitary_of_empty_and_hadamard():
    assert np.array_equal(unitary_of(Circuit(2)), np.eye(4))
    assert np.allclose(unitary_of(Circuit(1, (H(0),))), np.array([[1, 1], [1, -1]]) / math.sqrt(2))


def test_cx_convention():
    # control 0, target 1: |01> -> |11>
    u = unitary_of(Circuit(2, (CX(0, 1),)))
    assert u[0b11, 0b01] == 1 and u[0b10, 0b10] == 1


def test_rz_convention():
    u = unitary_of(Circuit(1, (RZ(0, 0.6),)))
    assert np.allclose(u, np.diag([np.exp(-0.3j), np.exp(0.3j)]))


def test_analytic_circuit_three_qubits():
    circuit, scale = analytic_boundary_circuit(3)
    b = (kron_word("ZZX") + kron_word("ZXI") + kron_word("XII"))
    assert np.abs(scale * unitary_of(circuit) - b).max() <= 1e-10


def test_emit_single_x():
    assert emit_text(Circuit(1, (X(0),))) == "qubits 1\nx 0\n"


def test_emit_with_comments_and_ancilla():
    c = Circuit(1, (H(1), CX(1, 0), RZ(0, 0.1)), ancilla_count=1)
    text = emit_text(c, ["hello"])
    assert text == "# hello\nqubits 2\nancilla 1\nh 1\ncx 1 0\nrz 0 0.10000000000000001\n"
    assert parse_text(text) == c


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_text("qubits 1\nfoo 0\n")
    with pytest.raises(ValueError):
        parse_text("h 0\n")


_gate = st.one_of(
    st.builds(lambda k, q: Gate(k, (q,)), st.sampled_from(["h", "s", "sdg", "x"]), st.integers(0, 3)),
    st.builds(lambda k, q, a: Gate(k, (q,), a), st.sampled_from(["rz", "rx"]), st.integers(0, 3),
              st.floats(allow_nan=False, allow_infinity=False)),
    st.lists(st.integers(0, 3), min_size=2, max_size=2, unique=True).map(lambda qs: CX(*qs)),
)


@given(st.lists(_gate, max_size=30))
@settings(max_examples=100, deadline=None)
def test_emit_round_trip(gates):
    c = Circuit(4, tuple(gates))
    assert parse_text(emit_text(c)) == c


def test_analytic_n3_has_four_rz_lines():
    circuit, _ = analytic_boundary_circuit(3)
    lines = emit_text(circuit).splitlines()
    assert sum(1 for line in lines if line.startswith("rz ")) == 4


def test_depth_counts():
    assert depth_and_counts(Circuit(3)) == (0, 0)
    assert depth_and_counts(analytic_boundary_circuit(2)[0])[1] == 2
    d4 = depth_and_counts(analytic_boundary_circuit(4)[0])[0]
    d8 = depth_and_counts(analytic_boundary_circuit(8)[0])[0]
    assert 1.6 <= d8 / d4 <= 2.4


def test_depth_parallel_gates():
    c = Circuit(3, (H(0), H(1), H(2), CX(0, 1), H(2)))
    assert depth_and_counts(c) == (2, 0)
    assert gate_counts(c) == {"h": 4, "cx": 1}


def test_inverse_circuit():
    c = Circuit(2, tuple(compile_pauli_rotation(PauliString.from_word("YX"), 0.4)) + (Gate("s", (0,)),))
    u = unitary_of(c + c.inverse())
    assert np.abs(u - np.eye(4)).max() <= 1e-12
