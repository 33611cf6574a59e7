"""Boundary operators built from Jordan-Wigner annihilation operators."""
from __future__ import annotations

import numpy as np
import scipy.sparse as sp

from ._config import check_limit
from .pauli import OperatorSum, jw_annihilation, majorana_x

# (X + iY)/2, the single-qubit raising block
RAISE = np.array([[0, 1], [0, 0]], dtype=np.int64)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.int64)


def full_boundary_fermionic(n: int) -> OperatorSum:
    """Sum of the ``n`` annihilation operators: ``2n`` Pauli terms."""
    if n < 1:
        raise ValueError(f"qubit count must be positive, got {n}")
    terms = ()
    for i in range(n):
        terms += jw_annihilation(i, n).terms
    return OperatorSum(n, terms)


def full_boundary_recurrence(n: int) -> sp.csc_matrix:
    """Integer boundary matrix grown one vertex at a time.

    Starts from the raising block and repeatedly prepends a qubit:
    ``D(m) = RAISE (x) I + Z (x) D(m-1)``.
    """
    if n < 1:
        raise ValueError(f"qubit count must be positive, got {n}")
    check_limit(n, "recurrence boundary")
    d = sp.csc_matrix(RAISE)
    for m in range(2, n + 1):
        eye = sp.identity(1 << (m - 1), dtype=np.int64, format="csc")
        d = (sp.kron(RAISE, eye, format="csc") + sp.kron(SIGMA_Z, d, format="csc")).tocsc()
    d.eliminate_zeros()
    d.sort_indices()
    return d


def hermitian_boundary(n: int) -> OperatorSum:
    """``d + d^dagger`` as the ``n`` strings ``Z...Z X I...I``, all with coefficient 1."""
    if n < 1:
        raise ValueError(f"qubit count must be positive, got {n}")
    return OperatorSum(n, tuple((1.0, majorana_x(i, n)) for i in range(n)))
