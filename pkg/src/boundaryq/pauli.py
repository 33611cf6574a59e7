"""Pauli strings with exact phase tracking, operator sums, and Jordan-Wigner operators.

Qubit 0 is the rightmost tensor factor and the least-significant bit of a
basis-state index. ``PauliString.axes[q]`` is the axis acting on qubit ``q``;
``PauliString.word`` spells the same string leftmost-factor-first, the way it
is written as a Kronecker product.

Phases are stored as an exponent ``k`` meaning ``i**k`` so products are exact.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Union

import numpy as np
import scipy.sparse as sp

from ._config import check_limit

AXES = "IXYZ"

# single-qubit products: (a, b) -> (exponent of i, axis of a*b)
_PRODUCT = {
    ("I", "I"): (0, "I"), ("I", "X"): (0, "X"), ("I", "Y"): (0, "Y"), ("I", "Z"): (0, "Z"),
    ("X", "I"): (0, "X"), ("X", "X"): (0, "I"), ("X", "Y"): (1, "Z"), ("X", "Z"): (3, "Y"),
    ("Y", "I"): (0, "Y"), ("Y", "X"): (3, "Z"), ("Y", "Y"): (0, "I"), ("Y", "Z"): (1, "X"),
    ("Z", "I"): (0, "Z"), ("Z", "X"): (1, "Y"), ("Z", "Y"): (3, "X"), ("Z", "Z"): (0, "I"),
}

_PHASE_VALUES = (1, 1j, -1, -1j)


class DimensionMismatchError(ValueError):
    """Operands act on different numbers of qubits."""


@dataclass(frozen=True)
class PauliString:
    """``i**phase`` times a tensor product of single-qubit Paulis.

    ``axes[q]`` acts on qubit ``q`` (qubit 0 = rightmost factor).
    """

    n: int
    axes: tuple[str, ...]
    phase: int = 0

    def __post_init__(self):
        axes = tuple(self.axes)
        if self.n < 1:
            raise ValueError(f"qubit count must be positive, got {self.n}")
        if len(axes) != self.n:
            raise ValueError(f"expected {self.n} axes, got {len(axes)}")
        bad = [a for a in axes if a not in AXES]
        if bad:
            raise ValueError(f"invalid Pauli axes {bad!r}")
        object.__setattr__(self, "axes", axes)
        object.__setattr__(self, "phase", int(self.phase) % 4)

    @classmethod
    def from_word(cls, word: str, phase: int = 0) -> "PauliString":
        """Build from a leftmost-factor-first word, e.g. ``"ZZX"`` is Z (x) Z (x) X."""
        word = word.strip().upper()
        return cls(len(word), tuple(reversed(word)), phase)

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(n, ("I",) * n)

    @classmethod
    def single(cls, n: int, qubit: int, axis: str) -> "PauliString":
        axes = ["I"] * n
        axes[qubit] = axis
        return cls(n, tuple(axes))

    @property
    def word(self) -> str:
        return "".join(reversed(self.axes))

    @property
    def phase_value(self) -> complex:
        return _PHASE_VALUES[self.phase]

    @property
    def x_mask(self) -> int:
        """Bits flipped by this string (X or Y positions)."""
        return sum(1 << q for q, a in enumerate(self.axes) if a in "XY")

    @property
    def z_mask(self) -> int:
        """Bits picking up a sign (Z or Y positions)."""
        return sum(1 << q for q, a in enumerate(self.axes) if a in "YZ")

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(q for q, a in enumerate(self.axes) if a != "I")

    def with_phase(self, phase: int) -> "PauliString":
        return PauliString(self.n, self.axes, phase)

    def __mul__(self, other: "PauliString") -> "PauliString":
        return multiply(self, other)

    def __str__(self) -> str:
        return ("", "i", "-", "-i")[self.phase] + self.word


def _check_same_n(n1: int, n2: int) -> None:
    if n1 != n2:
        raise DimensionMismatchError(f"incompatible operand sizes: {n1} vs {n2} qubits")


def multiply(p: PauliString, q: PauliString) -> PauliString:
    """Exact product ``p @ q``."""
    _check_same_n(p.n, q.n)
    phase = p.phase + q.phase
    axes = []
    for a, b in zip(p.axes, q.axes):
        k, c = _PRODUCT[a, b]
        phase += k
        axes.append(c)
    return PauliString(p.n, tuple(axes), phase)


def anticommutes(p: PauliString, q: PauliString) -> bool:
    """True iff ``pq = -qp``: odd number of positions with distinct non-identity axes."""
    _check_same_n(p.n, q.n)
    clashes = sum(1 for a, b in zip(p.axes, q.axes) if a != "I" and b != "I" and a != b)
    return clashes % 2 == 1


def commutes(p: PauliString, q: PauliString) -> bool:
    return not anticommutes(p, q)


Term = tuple[complex, PauliString]


@dataclass(frozen=True)
class OperatorSum:
    """A linear combination of Pauli strings on ``n`` qubits.

    Construction canonicalizes: string phases are folded into the coefficients,
    like words are merged and zero coefficients dropped. First-occurrence order
    of the words is kept so iteration is deterministic.
    """

    n: int
    terms: tuple[Term, ...] = field(default=())

    def __post_init__(self):
        merged: dict[tuple[str, ...], complex] = {}
        for coeff, string in self.terms:
            _check_same_n(self.n, string.n)
            # multiplying by a unit phase is exact in floating point
            c = complex(coeff) * string.phase_value
            merged[string.axes] = merged.get(string.axes, 0j) + c
        terms = tuple(
            (c, PauliString(self.n, axes)) for axes, c in merged.items() if c != 0
        )
        object.__setattr__(self, "terms", terms)

    @classmethod
    def from_strings(cls, strings: Iterable[PauliString], coeff: complex = 1.0) -> "OperatorSum":
        strings = list(strings)
        if not strings:
            raise ValueError("need at least one string to infer n")
        return cls(strings[0].n, tuple((coeff, s) for s in strings))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __add__(self, other: "OperatorSum") -> "OperatorSum":
        _check_same_n(self.n, other.n)
        return OperatorSum(self.n, self.terms + other.terms)

    def __mul__(self, other):
        if isinstance(other, OperatorSum):
            _check_same_n(self.n, other.n)
            return OperatorSum(
                self.n,
                tuple((a * b, multiply(p, q)) for a, p in self.terms for b, q in other.terms),
            )
        return OperatorSum(self.n, tuple((other * c, s) for c, s in self.terms))

    __rmul__ = __mul__

    def __matmul__(self, other: "OperatorSum") -> "OperatorSum":
        return self * other

    def dagger(self) -> "OperatorSum":
        # every canonical string is Hermitian, so only coefficients conjugate
        return OperatorSum(self.n, tuple((c.conjugate(), s) for c, s in self.terms))

    def canonical(self) -> "OperatorSum":
        return OperatorSum(self.n, self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def to_text(self) -> str:
        return format_operator_sum(self)


def _fmt(x: float) -> str:
    if x == 0:
        return "0"
    return format(x, ".17g")


def format_operator_sum(op: OperatorSum) -> str:
    """Serialize as ``<re> <im> <word>`` lines, word leftmost-factor-first."""
    return "".join(
        f"{_fmt(c.real)} {_fmt(c.imag)} {s.word}\n" for c, s in op.terms
    )


def parse_operator_sum(text: str, n: int | None = None) -> OperatorSum:
    terms = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected '<re> <im> <word>', got {line!r}")
        re_, im_, word = parts
        terms.append((complex(float(re_), float(im_)), PauliString.from_word(word)))
    if n is None:
        if not terms:
            raise ValueError("cannot infer qubit count from an empty operator")
        n = terms[0][1].n
    return OperatorSum(n, tuple(terms))


# ---------------------------------------------------------------------------
# Jordan-Wigner


def _check_mode(i: int, n: int) -> None:
    if n < 1:
        raise ValueError(f"qubit count must be positive, got {n}")
    if not 0 <= i < n:
        raise IndexError(f"mode index {i} out of range for {n} modes")


def _jw_string(i: int, n: int, axis: str) -> PauliString:
    axes = ["I"] * i + [axis] + ["Z"] * (n - i - 1)
    return PauliString(n, tuple(axes))


def jw_annihilation(i: int, n: int) -> OperatorSum:
    """``a_i = Z^(n-i-1) (x) (X + iY)/2 (x) I^i`` as two Pauli terms."""
    _check_mode(i, n)
    return OperatorSum(n, ((0.5, _jw_string(i, n, "X")), (0.5j, _jw_string(i, n, "Y"))))


def jw_creation(i: int, n: int) -> OperatorSum:
    return jw_annihilation(i, n).dagger()


def majorana_x(i: int, n: int) -> PauliString:
    """``a_i + a_i^dagger``: the string Z...Z X I...I with X on qubit ``i``."""
    _check_mode(i, n)
    return _jw_string(i, n, "X")


# ---------------------------------------------------------------------------
# matrix expansion


def _string_entries(p: PauliString) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Rows, columns and values of the 2^n nonzeros of a Pauli string."""
    cols = np.arange(1 << p.n, dtype=np.int64)
    rows = cols ^ p.x_mask
    n_y = sum(1 for a in p.axes if a == "Y")
    # Y|b> = i(-1)^b |1-b>, Z|b> = (-1)^b |b>
    signs = 1 - 2 * (np.bitwise_count(cols & p.z_mask) & 1).astype(np.int64)
    vals = _PHASE_VALUES[(p.phase + n_y) % 4] * signs.astype(np.complex128)
    return rows, cols, vals


def to_sparse(op: Union[OperatorSum, PauliString]) -> sp.csc_matrix:
    """Exact 2^n x 2^n expansion in compressed-column form."""
    if isinstance(op, PauliString):
        op = OperatorSum(op.n, ((1.0, op),))
    check_limit(op.n, "sparse expansion")
    dim = 1 << op.n
    if not op.terms:
        return sp.csc_matrix((dim, dim), dtype=np.complex128)
    rows, cols, vals = [], [], []
    for coeff, string in op.terms:
        r, c, v = _string_entries(string)
        rows.append(r)
        cols.append(c)
        vals.append(coeff * v)
    mat = sp.coo_matrix(
        (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
        shape=(dim, dim),
    ).tocsc()
    mat.sum_duplicates()
    mat.eliminate_zeros()
    mat.sort_indices()
    return mat


def to_dense(op: Union[OperatorSum, PauliString]) -> np.ndarray:
    return to_sparse(op).toarray()


def apply_pauli(p: PauliString, vec: np.ndarray) -> np.ndarray:
    """``p @ vec`` for a length-2^n vector without forming the matrix."""
    vec = np.asarray(vec)
    if vec.shape[0] != 1 << p.n:
        raise DimensionMismatchError(f"vector of length {vec.shape[0]} vs {p.n} qubits")
    rows, cols, vals = _string_entries(p)
    out = np.empty(vec.shape, dtype=np.complex128)
    out[rows] = vals * vec[cols] if vec.ndim == 1 else vals[:, None] * vec[cols]
    return out


def apply_operator(op: OperatorSum, vec: np.ndarray) -> np.ndarray:
    out = np.zeros(np.shape(vec), dtype=np.complex128)
    for coeff, string in op.terms:
        out += coeff * apply_pauli(string, vec)
    return out


def random_pauli(n: int, rng: np.random.Generator, phase: int | None = None) -> PauliString:
    axes = tuple(AXES[k] for k in rng.integers(0, 4, size=n))
    return PauliString(n, axes, int(rng.integers(0, 4)) if phase is None else phase)

