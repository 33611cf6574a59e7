"""
How many shots does <B> cost?
=============================

The exact circuit only suffers shot noise, so N grows like 1/eps^2. The
first-order Trotter route needs a short time t = eps/n and divides its
shot noise by t, so N grows like 1/eps^4.
"""
from boundaryq import (
    ShotConfig,
    StateVector,
    analytic_estimate,
    exact_boundary_expectation,
    scaling_experiment,
    trotter_estimate,
)

n = 4
psi = StateVector.haar(n, seed=0)
print("exact <B>          ", exact_boundary_expectation(psi))
print("analytic, exact    ", analytic_estimate(psi, n, ShotConfig.infinite())[0])
print("analytic, 10^4 shot", analytic_estimate(psi, n, ShotConfig(10**4, seed=1)))
for t in (0.2, 0.1, 0.05):
    print(f"trotter t={t:<5} bias", trotter_estimate(psi, n, t, ShotConfig.infinite())[0]
          - exact_boundary_expectation(psi))

report = scaling_experiment(n, [0.2, 0.1, 0.05], seeds=range(8), state=psi)
print()
print(report.summary())
