"""
Shots, seeds and the Hadamard test
==================================

Every random draw is keyed by an explicit 64-bit seed, so repeated runs
agree exactly. The Hadamard test reads Re or Im of <psi|U|psi> off an
ancilla.
"""
import math

from boundaryq import PauliString, ShotConfig, StateVector, evolution_circuit, hadamard_test, sample_pauli

psi = StateVector.haar(3, seed=7)
p = PauliString.from_word("XZY")
for shots in (100, 10_000, 1_000_000):
    est, err = sample_pauli(psi, p, ShotConfig(shots, seed=1))
    print(f"<XZY> with {shots:>9} shots: {est:+.5f} +/- {err:.5f}")
print("same seed, same answer:", sample_pauli(psi, p, ShotConfig(500, 3)) == sample_pauli(psi, p, ShotConfig(500, 3)))

t = 0.6
plus = StateVector.uniform(1)
u = evolution_circuit(1, t)
print("\nU = exp(-iXt) on |+>, t=0.6")
print("  Re exact", hadamard_test(u, plus, "real", ShotConfig.infinite())[0], "cos t =", math.cos(t))
print("  Im exact", hadamard_test(u, plus, "imag", ShotConfig.infinite())[0], "-sin t =", -math.sin(t))
print("  Im 10^5 shots", hadamard_test(u, plus, "imag", ShotConfig(10**5, seed=2)))
