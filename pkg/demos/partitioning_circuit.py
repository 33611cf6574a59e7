"""
Folding B onto a single qubit
=============================

A cascade of two-qubit rotations, followed by a layer of controlled-Z gates,
turns B into sqrt(n) X_0. The resulting circuit implements B (up to the
classical factor sqrt(n)) and exp(-iBt) exactly, with a size that does not
depend on t.
"""
import numpy as np
from scipy.linalg import expm

from boundaryq import (
    analytic_boundary_circuit,
    build_cascade,
    conjugate_check,
    depth_and_counts,
    emit_text,
    evolution_circuit,
    hermitian_boundary,
    to_dense,
    unitary_of,
)

for n in (2, 4, 8):
    print(f"n={n}: angles", [round(theta, 4) for _, theta in build_cascade(n)],
          f"residual {conjugate_check(n):.1e}")

n = 3
circuit, scale = analytic_boundary_circuit(n)
print("\nanalytic circuit for n=3:")
print(emit_text(circuit))
b = to_dense(hermitian_boundary(n))
print("max |sqrt(3) U - B| =", np.abs(scale * unitary_of(circuit) - b).max())

t = 0.9
u = unitary_of(evolution_circuit(n, t))
print("max |U(t) - expm(-iBt)| =", np.abs(u - expm(-1j * t * b)).max())

print("\n n  depth  rotations")
for n in range(2, 11):
    depth, rot = depth_and_counts(analytic_boundary_circuit(n)[0])
    print(f"{n:2d}  {depth:5d}  {rot:9d}")
