"""
Boundary operators as qubit operators
=====================================

Simplices on n vertices are n-bit strings. The full boundary map is built
three ways and compared; then the Hermitian version B is shown to be a sum
of n anticommuting Pauli strings with B^2 = n.
"""
import numpy as np

from boundaryq import (
    ChainVector,
    apply_boundary,
    full_boundary_fermionic,
    full_boundary_oracle,
    full_boundary_recurrence,
    hermitian_boundary,
    to_dense,
    to_sparse,
)

n = 3

# the triangle 111 has three signed edges
triangle = ChainVector.basis("111")
print("d(111) =", apply_boundary(triangle).to_text().strip().replace("\n", " ; "))

# the same map as 2n Pauli terms from Jordan-Wigner annihilators
print("\nPauli form of the full boundary, n=3:")
print(full_boundary_fermionic(n).to_text())

oracle = full_boundary_oracle(n).toarray()
print("matrix:\n", oracle)
print("fermionic == oracle:", np.array_equal(to_dense(full_boundary_fermionic(n)).real, oracle))
print("recurrence == oracle:", np.array_equal(full_boundary_recurrence(n).toarray(), oracle))

# applying the boundary twice gives nothing
print("d^2 == 0:", not (oracle @ oracle).any())

b = hermitian_boundary(4)
print("\nB for n=4:\n" + b.to_text())
bm = to_sparse(b)
print("B^2 == 4 I:", np.allclose((bm @ bm).toarray(), 4 * np.eye(16)))
