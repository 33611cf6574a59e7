"""Gate-level circuits over a small fixed gate set.

Gate set: ``h``, ``s``, ``sdg``, ``x``, ``rz(angle)``, ``rx(angle)``, ``cx``.
``RZ(a) = diag(exp(-ia/2), exp(ia/2))`` and ``RX(a) = exp(-ia/2 X)``.
A CNOT is written ``cx <control> <target>``.

Multi-qubit Pauli rotations are compiled the usual way: rotate every support
qubit into the Z basis, fold the parity into the last support qubit with a
CNOT chain, apply one ``rz`` there, then undo the chain and the basis change.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from ._config import check_limit
from .pauli import PauliString

ONE_QUBIT = ("h", "s", "sdg", "x")
PARAMETRIC = ("rz", "rx")
TWO_QUBIT = ("cx",)
KINDS = ONE_QUBIT + PARAMETRIC + TWO_QUBIT

_INV_SQRT2 = 1 / math.sqrt(2)
_FIXED = {
    "h": np.array([[1, 1], [1, -1]], dtype=np.complex128) * _INV_SQRT2,
    "s": np.array([[1, 0], [0, 1j]], dtype=np.complex128),
    "sdg": np.array([[1, 0], [0, -1j]], dtype=np.complex128),
    "x": np.array([[0, 1], [1, 0]], dtype=np.complex128),
}


def rz_matrix(angle: float) -> np.ndarray:
    return np.array(
        [[np.exp(-0.5j * angle), 0], [0, np.exp(0.5j * angle)]], dtype=np.complex128
    )


def rx_matrix(angle: float) -> np.ndarray:
    c, s = math.cos(angle / 2), math.sin(angle / 2)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=np.complex128)


@dataclass(frozen=True)
class Gate:
    kind: str
    qubits: tuple[int, ...]
    angle: Optional[float] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        qubits = tuple(int(q) for q in self.qubits)
        arity = 2 if self.kind in TWO_QUBIT else 1
        if len(qubits) != arity:
            raise ValueError(f"{self.kind} takes {arity} qubit(s), got {qubits}")
        if arity == 2 and qubits[0] == qubits[1]:
            raise ValueError(f"cx needs distinct control and target, got {qubits}")
        if any(q < 0 for q in qubits):
            raise ValueError(f"negative qubit index in {qubits}")
        if (self.kind in PARAMETRIC) != (self.angle is not None):
            raise ValueError(f"{self.kind}: angle must be given iff the gate is parameterized")
        object.__setattr__(self, "qubits", qubits)
        if self.angle is not None:
            object.__setattr__(self, "angle", float(self.angle))

    def matrix(self) -> np.ndarray:
        """2x2 matrix of a single-qubit gate."""
        if self.kind == "rz":
            return rz_matrix(self.angle)
        if self.kind == "rx":
            return rx_matrix(self.angle)
        if self.kind in _FIXED:
            return _FIXED[self.kind]
        raise ValueError("cx has no 2x2 matrix")

    def inverse(self) -> "Gate":
        if self.kind in PARAMETRIC:
            return Gate(self.kind, self.qubits, -self.angle)
        if self.kind == "s":
            return Gate("sdg", self.qubits)
        if self.kind == "sdg":
            return Gate("s", self.qubits)
        return self


# convenience constructors
def H(q: int) -> Gate:
    return Gate("h", (q,))


def X(q: int) -> Gate:
    return Gate("x", (q,))


def RZ(q: int, angle: float) -> Gate:
    return Gate("rz", (q,), angle)


def RX(q: int, angle: float) -> Gate:
    return Gate("rx", (q,), angle)


def CX(control: int, target: int) -> Gate:
    return Gate("cx", (control, target))


@dataclass(frozen=True)
class Circuit:
    n: int
    gates: tuple[Gate, ...] = field(default=())
    ancilla_count: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"qubit count must be positive, got {self.n}")
        if self.ancilla_count not in (0, 1):
            raise ValueError("ancilla_count must be 0 or 1")
        gates = tuple(self.gates)
        for g in gates:
            if max(g.qubits) >= self.width:
                raise ValueError(f"gate {g} outside a {self.width}-qubit register")
        object.__setattr__(self, "gates", gates)

    @property
    def width(self) -> int:
        return self.n + self.ancilla_count

    def __len__(self) -> int:
        return len(self.gates)

    def __add__(self, other: "Circuit") -> "Circuit":
        if (self.n, self.ancilla_count) != (other.n, other.ancilla_count):
            raise ValueError("cannot concatenate circuits on different registers")
        return Circuit(self.n, self.gates + other.gates, self.ancilla_count)

    def extend(self, gates: Iterable[Gate]) -> "Circuit":
        return Circuit(self.n, self.gates + tuple(gates), self.ancilla_count)

    def inverse(self) -> "Circuit":
        return Circuit(self.n, tuple(g.inverse() for g in reversed(self.gates)), self.ancilla_count)


# ---------------------------------------------------------------------------
# compilation


def _basis_change(axis: str, q: int) -> list[Gate]:
    """Gates V with V P V^dagger = Z for the single-qubit axis P."""
    if axis == "X":
        return [H(q)]
    if axis == "Y":
        return [RX(q, math.pi / 2)]
    return []


def pauli_rotation_gates(p: PauliString, angle: float) -> list[Gate]:
    """Gates for ``exp(+i * angle/2 * P)`` for a Pauli string of any support.

    The phase of ``p`` must be +1 or -1; a -1 flips the sign of the angle.
    """
    if p.phase not in (0, 2):
        raise ValueError("rotation generator must be Hermitian (phase +1 or -1)")
    if p.phase == 2:
        angle = -angle
    support = p.support
    if not support:
        raise ValueError("identity generator only contributes a global phase")
    pre = [g for q in support for g in _basis_change(p.axes[q], q)]
    ladder = [CX(a, b) for a, b in zip(support[:-1], support[1:])]
    # exp(+i a/2 Z) = RZ(-a)
    core = [RZ(support[-1], -angle)]
    post = [g.inverse() for g in reversed(pre)]
    return pre + ladder + core + list(reversed(ladder)) + post


def compile_pauli_rotation(p: PauliString, angle: float) -> list[Gate]:
    """Seven-gate ``exp(+i * angle/2 * P)`` for a two-qubit Pauli string."""
    if len(p.support) != 2:
        raise ValueError(f"expected exactly two non-identity axes, got {p.word}")
    return pauli_rotation_gates(p, angle)


# ---------------------------------------------------------------------------
# simulation kernels (shared with the statevector simulator)


def apply_gate(state: np.ndarray, gate: Gate, width: int) -> np.ndarray:
    """Apply ``gate`` to a ``(2**width,)`` vector or ``(2**width, m)`` column batch."""
    if gate.kind == "cx":
        c, t = gate.qubits
        idx = np.arange(1 << width, dtype=np.int64)
        return state[idx ^ (((idx >> c) & 1) << t)]
    q = gate.qubits[0]
    u = gate.matrix()
    batch = state.shape[1:]
    view = state.reshape((1 << (width - 1 - q), 2, 1 << q) + batch)
    out = np.einsum("ab,xby...->xay...", u, view)
    return out.reshape(state.shape)


def apply_circuit(state: np.ndarray, circuit: Circuit) -> np.ndarray:
    out = np.asarray(state, dtype=np.complex128)
    for g in circuit.gates:
        out = apply_gate(out, g, circuit.width)
    return out


def unitary_of(c: Circuit) -> np.ndarray:
    """Dense unitary of the whole register, gate by gate."""
    check_limit(c.width, "circuit unitary")
    return apply_circuit(np.eye(1 << c.width, dtype=np.complex128), c)


# ---------------------------------------------------------------------------
# metrics


def rotation_blocks(c: Circuit) -> int:
    """Number of compiled multi-qubit Pauli rotations.

    A block is recognized by its core ``rz`` sitting directly after a ``cx``
    that targets the same qubit.
    """
    count = 0
    for prev, g in zip(c.gates, c.gates[1:]):
        if g.kind == "rz" and prev.kind == "cx" and prev.qubits[1] == g.qubits[0]:
            count += 1
    return count


def depth_and_counts(c: Circuit) -> tuple[int, int]:
    """Greedy layered depth and the number of Pauli-rotation blocks."""
    level = [0] * c.width
    depth = 0
    for g in c.gates:
        d = max(level[q] for q in g.qubits) + 1
        for q in g.qubits:
            level[q] = d
        depth = max(depth, d)
    return depth, rotation_blocks(c)


def gate_counts(c: Circuit) -> dict[str, int]:
    counts: dict[str, int] = {}
    for g in c.gates:
        counts[g.kind] = counts.get(g.kind, 0) + 1
    return counts


# ---------------------------------------------------------------------------
# text format


def emit_text(c: Circuit, comments: Sequence[str] = ()) -> str:
    lines = [f"# {line}" for line in comments]
    lines.append(f"qubits {c.width}")
    if c.ancilla_count:
        lines.append(f"ancilla {c.ancilla_count}")
    for g in c.gates:
        args = " ".join(str(q) for q in g.qubits)
        if g.angle is not None:
            args += " " + format(g.angle, ".17g")
        lines.append(f"{g.kind} {args}")
    return "\n".join(lines) + "\n"


def parse_text(text: str) -> Circuit:
    width = None
    ancilla = 0
    gates = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, *rest = line.split()
        if head == "qubits":
            width = int(rest[0])
        elif head == "ancilla":
            ancilla = int(rest[0])
        elif head in KINDS:
            if head in PARAMETRIC:
                gates.append(Gate(head, (int(rest[0]),), float(rest[1])))
            else:
                gates.append(Gate(head, tuple(int(r) for r in rest)))
        else:
            raise ValueError(f"line {lineno}: unknown instruction {head!r}")
    if width is None:
        raise ValueError("missing 'qubits' header")
    return Circuit(width - ancilla, tuple(gates), ancilla)
