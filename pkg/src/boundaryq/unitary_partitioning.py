"""Unitary partitioning of the Hermitian boundary operator.

The ``n`` strings ``Q_i`` making up ``B`` pairwise anticommute, so a cascade
of two-qubit rotations generated by ``Y_i X_{i-1}`` folds ``B`` onto a single
string. Step ``i`` merges ``sqrt(n-i) Q_i + Q_{i-1}`` into
``sqrt(n-i+1) Q_{i-1}``; steps run ``i = n-1, ..., 1`` in time order, so the
cascade ``C`` gives ``C B C^dagger = sqrt(n) Q_0``.

``Q_0 = Z_{n-1} ... Z_1 X_0`` still carries the Jordan-Wigner parity string.
A layer of controlled-Z gates between qubit 0 and every other qubit removes
it, so the full partitioning unitary ``R = F C`` satisfies
``R B R^dagger = sqrt(n) X_0`` with a genuinely single-qubit ``X_0``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .circuit import CX, Circuit, H, RZ, X, compile_pauli_rotation
from .fermionic import hermitian_boundary
from .pauli import PauliString, majorana_x, to_dense, to_sparse
from .simplicial import projector

TWO_PI = 2 * math.pi


def rotation_generator(i: int, n: int) -> PauliString:
    """``Y`` on qubit ``i`` and ``X`` on qubit ``i-1``; equals ``-i Q_{i-1} Q_i``."""
    if not 1 <= i < n:
        raise IndexError(f"rotation index {i} out of range for {n} qubits")
    axes = ["I"] * n
    axes[i] = "Y"
    axes[i - 1] = "X"
    return PauliString(n, tuple(axes))


@dataclass(frozen=True)
class RotationCascade:
    n: int
    steps: tuple[tuple[int, float], ...]

    def __iter__(self):
        return iter(self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def to_text(self) -> str:
        return "".join(f"{i} {theta:.17g}\n" for i, theta in self.steps)

    @classmethod
    def from_text(cls, n: int, text: str) -> "RotationCascade":
        steps = []
        for line in text.splitlines():
            line = line.strip()
            if line and not line.startswith("#"):
                i, theta = line.split()
                steps.append((int(i), float(theta)))
        return cls(n, tuple(steps))


def build_cascade(n: int) -> RotationCascade:
    """Steps ``(i, atan2(sqrt(n-i), 1))`` for ``i = n-1`` down to 1."""
    if n < 1:
        raise ValueError(f"qubit count must be positive, got {n}")
    return RotationCascade(
        n, tuple((i, math.atan2(math.sqrt(n - i), 1.0)) for i in range(n - 1, 0, -1))
    )


def step_unitary(n: int, i: int, theta: float) -> np.ndarray:
    """Dense ``exp(+i theta/2 Y_i X_{i-1})``; the generator squares to one."""
    g = to_dense(rotation_generator(i, n))
    return math.cos(theta / 2) * np.eye(1 << n) + 1j * math.sin(theta / 2) * g


def cascade_unitary(cascade: RotationCascade) -> np.ndarray:
    """Dense rotation cascade; the first step in the list acts first (rightmost factor)."""
    r = np.eye(1 << cascade.n, dtype=np.complex128)
    for i, theta in cascade.steps:
        r = step_unitary(cascade.n, i, theta) @ r
    return r


def unfold_gates(n: int) -> list:
    """Controlled-Z from qubit 0 to each other qubit, written as H-CX-H.

    Conjugation maps ``Z_{n-1} ... Z_1 X_0`` to ``X_0``; the layer is its own inverse.
    """
    gates = []
    for j in range(1, n):
        gates += [H(j), CX(0, j), H(j)]
    return gates


def unfold_unitary(n: int) -> np.ndarray:
    idx = np.arange(1 << n)
    # CZ(0, j) for all j: sign (-1)^(bit0 * popcount(bits 1..n-1))
    sign = 1 - 2 * ((idx & 1) * (np.bitwise_count(idx >> 1) & 1))
    return np.diag(sign.astype(np.complex128))


def partitioning_unitary(n: int, cascade: RotationCascade | None = None) -> np.ndarray:
    """Dense ``R = F C`` with ``R B R^dagger = sqrt(n) X_0``."""
    cascade = build_cascade(n) if cascade is None else cascade
    return unfold_unitary(n) @ cascade_unitary(cascade)


def conjugate_check(n: int, cascade: RotationCascade | None = None) -> float:
    """Frobenius norm of ``R B R^dagger - sqrt(n) X_0`` from dense matrices."""
    b = to_dense(hermitian_boundary(n))
    r = partitioning_unitary(n, cascade)
    target = math.sqrt(n) * to_dense(PauliString.single(n, 0, "X"))
    return float(np.linalg.norm(r @ b @ r.conj().T - target))


def cascade_check(n: int, cascade: RotationCascade | None = None) -> float:
    """Frobenius norm of ``C B C^dagger - sqrt(n) Q_0`` for the bare rotation cascade."""
    cascade = build_cascade(n) if cascade is None else cascade
    b = to_dense(hermitian_boundary(n))
    c = cascade_unitary(cascade)
    target = math.sqrt(n) * to_dense(majorana_x(0, n))
    return float(np.linalg.norm(c @ b @ c.conj().T - target))


def cascade_circuit(cascade: RotationCascade) -> Circuit:
    gates = []
    for i, theta in cascade.steps:
        gates += compile_pauli_rotation(rotation_generator(i, cascade.n), theta)
    return Circuit(cascade.n, tuple(gates))


def partitioning_circuit(n: int, cascade: RotationCascade | None = None) -> Circuit:
    """Circuit for ``R``: the rotation cascade followed by the unfolding layer."""
    c = cascade_circuit(build_cascade(n) if cascade is None else cascade)
    return c.extend(unfold_gates(n))


def analytic_boundary_circuit(n: int, cascade: RotationCascade | None = None) -> tuple[Circuit, float]:
    """Circuit for ``R^dagger X_0 R`` and the factor ``sqrt(n)`` restoring ``B``."""
    r = partitioning_circuit(n, cascade)
    return r + Circuit(n, (X(0),)) + r.inverse(), math.sqrt(n)


def central_rz_angle(n: int, t: float) -> float:
    """RZ angle for ``exp(-i sqrt(n) t X)``: twice ``sqrt(n) t`` reduced mod 2 pi."""
    if not math.isfinite(t):
        raise ValueError(f"evolution time must be finite, got {t}")
    return 2.0 * ((math.sqrt(n) * t) % TWO_PI)


def evolution_circuit(n: int, t: float, cascade: RotationCascade | None = None) -> Circuit:
    """Circuit for ``exp(-i B t) = R^dagger exp(-i sqrt(n) X_0 t) R``; size independent of ``t``."""
    angle = central_rz_angle(n, t)
    r = partitioning_circuit(n, cascade)
    return r + Circuit(n, (H(0), RZ(0, angle), H(0))) + r.inverse()


def restricted_from_hermitian(k: int, n: int) -> sp.csc_matrix:
    """``P_{k-1} B P_k``, which recovers the restricted boundary map."""
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range [1, {n}]")
    b = to_sparse(hermitian_boundary(n))
    out = (projector(k - 1, n) @ b @ projector(k, n)).tocsc()
    out.eliminate_zeros()
    out.sort_indices()
    return out
