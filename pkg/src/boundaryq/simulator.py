"""Dense statevector simulation with seeded shot sampling.

Every random draw goes through a ``numpy.random.Generator`` backed by the
counter-based Philox bit generator keyed with the caller's 64-bit seed, so a
given (circuit, state, config) always produces the same numbers.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from ._config import check_limit
from .circuit import Circuit, Gate, apply_circuit, apply_gate
from .pauli import DimensionMismatchError, OperatorSum, PauliString, apply_operator

NORM_TOL = 1e-10


@dataclass(frozen=True)
class ShotConfig:
    """``shots`` samples drawn with ``seed``; ``exact`` switches to the infinite-shot limit."""

    shots: int = 1000
    seed: int = 0
    exact: bool = False

    def __post_init__(self):
        if not self.exact and int(self.shots) < 1:
            raise ValueError(f"shots must be at least 1, got {self.shots}")
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError(f"seed must fit in 64 bits, got {self.seed}")

    @classmethod
    def infinite(cls) -> "ShotConfig":
        return cls(shots=1, seed=0, exact=True)

    def rng(self) -> np.random.Generator:
        return make_rng(self.seed)


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(int(seed)))


@dataclass(frozen=True, eq=False)
class StateVector:
    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (1 << self.n,):
            raise DimensionMismatchError(
                f"expected {1 << self.n} amplitudes for {self.n} qubits, got {amps.shape}"
            )
        norm = np.linalg.norm(amps)
        if abs(norm - 1) > NORM_TOL:
            raise ValueError(f"state is not normalized (norm {norm!r})")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_array(cls, amps, normalize: bool = False) -> "StateVector":
        amps = np.asarray(amps, dtype=np.complex128)
        if normalize:
            amps = amps / np.linalg.norm(amps)
        return cls(int(amps.shape[0]).bit_length() - 1, amps)

    @classmethod
    def basis(cls, n: int, index: int = 0) -> "StateVector":
        check_limit(n, "state vector")
        amps = np.zeros(1 << n, dtype=np.complex128)
        amps[index] = 1
        return cls(n, amps)

    @classmethod
    def zeros(cls, n: int) -> "StateVector":
        return cls.basis(n, 0)

    @classmethod
    def uniform(cls, n: int) -> "StateVector":
        check_limit(n, "state vector")
        return cls(n, np.full(1 << n, 2 ** (-n / 2), dtype=np.complex128))

    @classmethod
    def haar(cls, n: int, seed: int) -> "StateVector":
        check_limit(n, "state vector")
        rng = make_rng(seed)
        amps = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
        return cls(n, amps / np.linalg.norm(amps))

    def probabilities(self) -> np.ndarray:
        p = np.abs(self.amplitudes) ** 2
        return p / p.sum()

    def inner(self, other: "StateVector") -> complex:
        return complex(np.vdot(self.amplitudes, other.amplitudes))


def state_catalog(n: int, seed: int = 0) -> dict[str, StateVector]:
    """The fixed test states: all-zeros, uniform superposition and a seeded Haar state."""
    return {
        "zeros": StateVector.zeros(n),
        "uniform": StateVector.uniform(n),
        "haar": StateVector.haar(n, seed),
    }


def run(c: Circuit, state: StateVector) -> StateVector:
    if c.width != state.n:
        raise DimensionMismatchError(f"{c.width}-qubit circuit on a {state.n}-qubit state")
    return StateVector(state.n, apply_circuit(state.amplitudes, c))


def expectation(state: StateVector, op: OperatorSum | PauliString) -> complex:
    if isinstance(op, PauliString):
        op = OperatorSum(op.n, ((1.0, op),))
    if op.n != state.n:
        raise DimensionMismatchError(f"{op.n}-qubit operator on a {state.n}-qubit state")
    return complex(np.vdot(state.amplitudes, apply_operator(op, state.amplitudes)))


def _mean_and_stderr(plus: int, shots: int) -> tuple[float, float]:
    """Mean and standard error of ``shots`` outcomes in {+1, -1}, ``plus`` of them +1.

    Uses the unbiased sample variance; a single shot reports zero error.
    """
    mean = (2 * plus - shots) / shots
    if shots == 1:
        return mean, 0.0
    var = max(1.0 - mean * mean, 0.0) * shots / (shots - 1)
    return mean, math.sqrt(var / shots)


def _z_basis_gates(p: PauliString) -> list[Gate]:
    gates = []
    for q, axis in enumerate(p.axes):
        if axis == "X":
            gates.append(Gate("h", (q,)))
        elif axis == "Y":
            gates.append(Gate("rx", (q,), math.pi / 2))
    return gates


def _parity_split(state: StateVector, p: PauliString) -> tuple[np.ndarray, np.ndarray]:
    """Born probabilities in the Z basis of ``p`` and the odd-parity mask over its support."""
    amps = state.amplitudes
    for g in _z_basis_gates(p):
        amps = apply_gate(amps, g, state.n)
    probs = np.abs(amps) ** 2
    probs /= probs.sum()
    mask = sum(1 << q for q in p.support)
    odd = (np.bitwise_count(np.arange(1 << state.n) & mask) & 1).astype(bool)
    return probs, odd


def sample_pauli(state: StateVector, p: PauliString, cfg: ShotConfig) -> tuple[float, float]:
    """Shot estimate of ``<p>`` and its standard error.

    The state is rotated into the Z basis of ``p``, ``cfg.shots`` bitstrings
    are drawn from the Born distribution and the parity over the support of
    ``p`` gives each shot's +1/-1 value.
    """
    if p.phase != 0:
        raise ValueError(f"sample_pauli needs a +1 phase, got {p}")
    if p.n != state.n:
        raise DimensionMismatchError(f"{p.n}-qubit string on a {state.n}-qubit state")
    if cfg.exact:
        return expectation(state, p).real, 0.0
    probs, odd = _parity_split(state, p)
    counts = cfg.rng().multinomial(cfg.shots, probs)
    plus = int(counts[~odd].sum())
    return _mean_and_stderr(plus, cfg.shots)


def _controlled_apply(amps: np.ndarray, c: Circuit, n: int) -> np.ndarray:
    """Apply ``c`` to the data register only where the ancilla (top qubit) is 1."""
    half = 1 << n
    out = amps.copy()
    out[half:] = apply_circuit(amps[half:], c)
    return out


def hadamard_test_state(c: Circuit, state: StateVector, part: Literal["real", "imag"]) -> np.ndarray:
    """Amplitudes on ``n + 1`` qubits just before the ancilla is measured.

    The ancilla is the top qubit ``n``. The imaginary part uses an ``sdg`` on
    the ancilla before the final Hadamard.
    """
    if c.width != state.n:
        raise DimensionMismatchError(f"{c.width}-qubit circuit on a {state.n}-qubit state")
    if part not in ("real", "imag"):
        raise ValueError(f"part must be 'real' or 'imag', got {part!r}")
    n = state.n
    check_limit(n + 1, "hadamard test")
    anc = n
    amps = np.zeros(1 << (n + 1), dtype=np.complex128)
    amps[: 1 << n] = state.amplitudes
    amps = apply_gate(amps, Gate("h", (anc,)), n + 1)
    amps = _controlled_apply(amps, c, n)
    if part == "imag":
        amps = apply_gate(amps, Gate("sdg", (anc,)), n + 1)
    return apply_gate(amps, Gate("h", (anc,)), n + 1)


def hadamard_test(
    c: Circuit,
    state: StateVector,
    part: Literal["real", "imag"],
    cfg: ShotConfig,
) -> tuple[float, float]:
    """Estimate ``Re`` or ``Im`` of ``<psi|U|psi>`` from ancilla outcomes.

    Ancilla 0 counts as +1 and ancilla 1 as -1, so the mean outcome is the
    requested part. Exact mode returns the infinite-shot value with zero error.
    """
    amps = hadamard_test_state(c, state, part)
    half = 1 << state.n
    p0 = float(np.sum(np.abs(amps[:half]) ** 2) / np.sum(np.abs(amps) ** 2))
    if cfg.exact:
        return 2 * p0 - 1, 0.0
    plus = int(cfg.rng().binomial(cfg.shots, min(max(p0, 0.0), 1.0)))
    return _mean_and_stderr(plus, cfg.shots)


def merge_estimates(parts: list[tuple[float, float, int]]) -> tuple[float, float, int]:
    """Count-weighted merge of ``(estimate, stderr, shots)`` shards of the same +/-1 observable."""
    total = sum(s for _, _, s in parts)
    if total == 0:
        raise ValueError("nothing to merge")
    mean = sum(e * s for e, _, s in parts) / total
    return mean, math.sqrt(max(1.0 - mean * mean, 0.0) / total), total
