"""Classical boundary operators on bitstring-encoded simplices.

A simplex on ``n`` vertices is an ``n``-bit word; bit ``i`` (counted from the
right, starting at 0) set means vertex ``i`` belongs to the simplex, so a word
with ``k`` ones is a ``(k-1)``-simplex and the all-zeros word is the empty
simplex. Everything here is built straight from that definition with integer
arithmetic and serves as the reference the Pauli-side constructions are
checked against.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np
import scipy.sparse as sp

from ._config import check_limit


@dataclass(frozen=True)
class SimplexState:
    n: int
    bits: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bits {self.bits:#b} do not fit in {self.n} vertices")

    @classmethod
    def from_bitstring(cls, s: str) -> "SimplexState":
        return cls(len(s), int(s, 2))

    @property
    def k(self) -> int:
        """Number of vertices (dimension plus one)."""
        return self.bits.bit_count()

    @property
    def dimension(self) -> int:
        return self.k - 1

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if self.bits >> i & 1)

    @property
    def bitstring(self) -> str:
        return format(self.bits, f"0{self.n}b")


def face_signs(bits: int, n: int) -> list[tuple[int, int]]:
    """Faces of one simplex as ``(face_bits, sign)``.

    Removing vertex ``i`` carries ``(-1)`` to the number of set bits above ``i``.
    """
    faces = []
    above = 0
    for i in range(n - 1, -1, -1):
        if bits >> i & 1:
            faces.append((bits & ~(1 << i), -1 if above % 2 else 1))
            above += 1
    return faces


def _check_k(k: int, n: int, lo: int) -> None:
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    if not lo <= k <= n:
        raise ValueError(f"k={k} out of range [{lo}, {n}]")


def _boundary_matrix(n: int, ks) -> sp.csc_matrix:
    check_limit(n, "boundary matrix")
    dim = 1 << n
    rows, cols, vals = [], [], []
    for col in range(dim):
        if col.bit_count() not in ks:
            continue
        for face, sign in face_signs(col, n):
            rows.append(face)
            cols.append(col)
            vals.append(sign)
    mat = sp.csc_matrix(
        (np.array(vals, dtype=np.int64), (np.array(rows, dtype=np.int64), np.array(cols, dtype=np.int64))),
        shape=(dim, dim),
    )
    mat.sort_indices()
    return mat


def restricted_boundary(k: int, n: int) -> sp.csc_matrix:
    """Integer matrix of the boundary map restricted to simplices with ``k`` vertices.

    Columns with popcount other than ``k`` are zero.
    """
    _check_k(k, n, 1)
    return _boundary_matrix(n, {k})


def full_boundary_oracle(n: int) -> sp.csc_matrix:
    """Sum of all restricted boundary maps, ``k = 1..n``."""
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    return _boundary_matrix(n, set(range(1, n + 1)))


def projector(k: int, n: int) -> sp.csc_matrix:
    """Diagonal 0/1 selector of basis states with exactly ``k`` ones."""
    _check_k(k, n, 0)
    check_limit(n, "projector")
    idx = np.arange(1 << n, dtype=np.int64)
    diag = (np.bitwise_count(idx) == k).astype(np.int64)
    return sp.diags(diag, format="csc", dtype=np.int64)


def parity_string(n: int) -> sp.csc_matrix:
    """``Z`` on every qubit: ``(-1)`` to the popcount on the diagonal."""
    check_limit(n, "parity operator")
    idx = np.arange(1 << n, dtype=np.int64)
    diag = 1 - 2 * (np.bitwise_count(idx) & 1).astype(np.int64)
    return sp.diags(diag, format="csc", dtype=np.int64)


@dataclass(frozen=True)
class ChainVector:
    """Finite linear combination of simplices; missing keys are zero."""

    n: int
    amplitudes: Mapping[int, complex] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        clean = {}
        for bits, c in self.amplitudes.items():
            bits = int(bits)
            if not 0 <= bits < (1 << self.n):
                raise ValueError(f"bits {bits:#b} do not fit in {self.n} vertices")
            if c != 0:
                clean[bits] = complex(c)
        object.__setattr__(self, "amplitudes", dict(sorted(clean.items())))

    @classmethod
    def basis(cls, s: str | SimplexState, coeff: complex = 1) -> "ChainVector":
        if isinstance(s, str):
            s = SimplexState.from_bitstring(s)
        return cls(s.n, {s.bits: coeff})

    @classmethod
    def from_vector(cls, vec: np.ndarray) -> "ChainVector":
        vec = np.asarray(vec)
        n = int(vec.shape[0]).bit_length() - 1
        return cls(n, {int(i): complex(vec[i]) for i in np.flatnonzero(vec)})

    def to_vector(self) -> np.ndarray:
        vec = np.zeros(1 << self.n, dtype=np.complex128)
        for bits, c in self.amplitudes.items():
            vec[bits] = c
        return vec

    def is_zero(self) -> bool:
        return not self.amplitudes

    def __add__(self, other: "ChainVector") -> "ChainVector":
        if other.n != self.n:
            raise ValueError("chains live on different vertex counts")
        out = dict(self.amplitudes)
        for bits, c in other.amplitudes.items():
            out[bits] = out.get(bits, 0) + c
        return ChainVector(self.n, out)

    def to_text(self) -> str:
        return format_chain(self)


def apply_boundary(chain: ChainVector) -> ChainVector:
    """Full boundary of a chain, extended linearly from single simplices."""
    out: dict[int, complex] = {}
    for bits, c in chain.amplitudes.items():
        for face, sign in face_signs(bits, chain.n):
            out[face] = out.get(face, 0) + sign * c
    return ChainVector(chain.n, out)


# ---------------------------------------------------------------------------
# text formats


def _fmt(x: float) -> str:
    if x == 0:
        return "0"
    return format(x, ".17g")


def format_chain(chain: ChainVector) -> str:
    """``<re> <im> <bitstring>`` per nonzero entry, ascending by word."""
    return "".join(
        f"{_fmt(c.real)} {_fmt(c.imag)} {format(bits, f'0{chain.n}b')}\n"
        for bits, c in chain.amplitudes.items()
    )


def parse_chain(text: str) -> ChainVector:
    amps: dict[int, complex] = {}
    n = None
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        re_, im_, word = line.split()
        if n is None:
            n = len(word)
        elif len(word) != n:
            raise ValueError(f"bitstring {word!r} has the wrong length")
        bits = int(word, 2)
        amps[bits] = amps.get(bits, 0) + complex(float(re_), float(im_))
    if n is None:
        raise ValueError("cannot infer vertex count from an empty chain")
    return ChainVector(n, amps)


def format_sparse(mat: sp.spmatrix) -> str:
    """``<row> <col> <re> <im>`` lines sorted by ``(col, row)``, preceded by a shape line."""
    coo = sp.coo_matrix(mat)
    order = np.lexsort((coo.row, coo.col))
    lines = [f"# shape {mat.shape[0]} {mat.shape[1]}\n"]
    for idx in order:
        v = complex(coo.data[idx])
        if v == 0:
            continue
        lines.append(f"{coo.row[idx]} {coo.col[idx]} {_fmt(v.real)} {_fmt(v.imag)}\n")
    return "".join(lines)


def parse_sparse(text: str, shape: tuple[int, int] | None = None) -> sp.csc_matrix:
    rows, cols, vals = [], [], []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if parts and parts[0] == "shape" and shape is None:
                shape = (int(parts[1]), int(parts[2]))
            continue
        r, c, re_, im_ = line.split()
        rows.append(int(r))
        cols.append(int(c))
        vals.append(complex(float(re_), float(im_)))
    if shape is None:
        raise ValueError("sparse text has no shape line and no shape was given")
    mat = sp.csc_matrix(
        (np.array(vals, dtype=np.complex128), (np.array(rows, dtype=np.int64), np.array(cols, dtype=np.int64))),
        shape=shape,
    )
    mat.sort_indices()
    return mat
