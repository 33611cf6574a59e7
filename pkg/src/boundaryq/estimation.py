"""Shot cost of estimating <B>: exact partitioning circuit versus first-order Trotter.

The analytic estimator rotates the state with ``R`` and measures ``X_0``;
its only error is shot noise. The Trotter estimator runs a Hadamard test on
the product of single-term evolutions for a short time ``t`` and reads ``<B>``
off the imaginary part, ``-Im<U>/t``, so it carries an ``O(t)`` bias and its
shot noise is amplified by ``1/t``.

Error budget used when searching for the required number of shots: the bias
(infinite-shot estimate minus the dense-oracle value) plus the measured
standard error, added linearly.
"""
from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .circuit import Circuit, pauli_rotation_gates
from .fermionic import hermitian_boundary
from .pauli import PauliString, majorana_x
from .simulator import ShotConfig, StateVector, expectation, hadamard_test, run, sample_pauli, state_catalog
from .unitary_partitioning import partitioning_circuit

DEFAULT_SHOT_CAP = 10**10
# smallest trial size: below this the plug-in variance of a +/-1 sample is unreliable
MIN_SHOTS = 32
METHODS = ("analytic", "trotter")


def exact_boundary_expectation(state: StateVector) -> float:
    """``<psi|B|psi>`` from the Pauli-sum action; real because ``B`` is Hermitian."""
    return expectation(state, hermitian_boundary(state.n)).real


def analytic_estimate(state: StateVector, n: int, cfg: ShotConfig) -> tuple[float, float]:
    """``sqrt(n) <X_0>`` measured after applying ``R``."""
    if state.n != n:
        raise ValueError(f"{state.n}-qubit state for an n={n} estimator")
    rotated = run(partitioning_circuit(n), state)
    mean, err = sample_pauli(rotated, PauliString.single(n, 0, "X"), cfg)
    scale = math.sqrt(n)
    return scale * mean, scale * err


def trotter_circuit(n: int, t: float) -> Circuit:
    """``exp(-i Q_{n-1} t) ... exp(-i Q_0 t)``: the ``Q_0`` factor is applied first."""
    if n < 1:
        raise ValueError(f"qubit count must be positive, got {n}")
    gates = []
    for i in range(n):
        # exp(-i t Q) = exp(+i (-2t)/2 Q)
        gates += pauli_rotation_gates(majorana_x(i, n), -2.0 * t)
    return Circuit(n, tuple(gates))


def trotter_estimate(state: StateVector, n: int, t: float, cfg: ShotConfig) -> tuple[float, float]:
    """``-Im<psi|U_trotter(t)|psi> / t`` from a Hadamard test."""
    if not t > 0:
        raise ValueError(f"Trotter time must be positive, got {t}")
    if state.n != n:
        raise ValueError(f"{state.n}-qubit state for an n={n} estimator")
    im, err = hadamard_test(trotter_circuit(n, t), state, "imag", cfg)
    return -im / t, err / t


# ---------------------------------------------------------------------------
# shot-scaling study


@dataclass(frozen=True)
class ScalingRow:
    method: str
    n: int
    t: float
    eps: float
    seed: int
    shots: Optional[int]
    bias: float
    stderr: float
    total_error: float

    @property
    def reached(self) -> bool:
        return self.shots is not None


@dataclass
class ScalingReport:
    rows: list[ScalingRow] = field(default_factory=list)
    shot_cap: int = DEFAULT_SHOT_CAP

    def medians(self, method: str) -> dict[float, Optional[float]]:
        """Median required shots per target error; ``None`` if any seed missed the cap."""
        out: dict[float, Optional[float]] = {}
        for eps in sorted({r.eps for r in self.rows if r.method == method}, reverse=True):
            cells = [r for r in self.rows if r.method == method and r.eps == eps]
            if all(r.reached for r in cells):
                out[eps] = float(np.median([r.shots for r in cells]))
            else:
                out[eps] = None
        return out

    def fitted_exponent(self, method: str) -> Optional[float]:
        """Slope of ``log N`` against ``log(1/eps)`` over the reachable grid points."""
        pts = [(e, m) for e, m in self.medians(method).items() if m is not None]
        if len(pts) < 2:
            return None
        x = np.log([1 / e for e, _ in pts])
        y = np.log([m for _, m in pts])
        return float(np.polyfit(x, y, 1)[0])

    def shot_ratios(self) -> dict[float, Optional[float]]:
        a, t = self.medians("analytic"), self.medians("trotter")
        return {
            eps: (t[eps] / a[eps] if a.get(eps) and t.get(eps) else None)
            for eps in a
        }

    def to_tsv(self) -> str:
        buf = io.StringIO()
        buf.write("method\tn\tt\teps\tseed\tshots\tbias\tstderr\ttotal_error\tstatus\n")
        for r in self.rows:
            shots = "" if r.shots is None else str(r.shots)
            status = "ok" if r.reached else "unreachable"
            buf.write(
                f"{r.method}\t{r.n}\t{r.t:.17g}\t{r.eps:.17g}\t{r.seed}\t{shots}\t"
                f"{r.bias:.17g}\t{r.stderr:.17g}\t{r.total_error:.17g}\t{status}\n"
            )
        return buf.getvalue()

    def plot_data(self, method: str) -> str:
        """Two columns, ``1/eps`` and median shots, for gnuplot."""
        lines = [f"# {method}: 1/eps median_shots"]
        for eps, m in self.medians(method).items():
            if m is not None:
                lines.append(f"{1 / eps:.17g} {m:.17g}")
        return "\n".join(lines) + "\n"

    def summary(self) -> str:
        lines = []
        for method in METHODS:
            exp_ = self.fitted_exponent(method)
            lines.append(f"{method}_exponent\t{'nan' if exp_ is None else format(exp_, '.6f')}")
        for eps, ratio in self.shot_ratios().items():
            lines.append(f"ratio_eps_{eps:g}\t{'nan' if ratio is None else format(ratio, '.6f')}")
        flagged = sum(1 for r in self.rows if not r.reached)
        lines.append(f"unreachable_cells\t{flagged}")
        return "\n".join(lines) + "\n"


def _cell_seed(seed: int, method: str, eps_index: int, shots: int) -> int:
    ss = np.random.SeedSequence([int(seed), METHODS.index(method), eps_index, int(shots)])
    return int(ss.generate_state(1, np.uint64)[0])


def _estimator(method: str, state: StateVector, n: int, t: float):
    if method == "analytic":
        return lambda cfg: analytic_estimate(state, n, cfg)
    return lambda cfg: trotter_estimate(state, n, t, cfg)


def required_shots(
    method: str,
    state: StateVector,
    eps: float,
    seed: int,
    eps_index: int = 0,
    shot_cap: int = DEFAULT_SHOT_CAP,
) -> ScalingRow:
    """Smallest shot count whose measured error budget ``|bias| + stderr`` is within ``eps``.

    Doubles the shot count from ``MIN_SHOTS`` until the budget is met, then
    bisects. Every trial draws fresh samples from a seed derived from
    ``(seed, method, eps_index, shots)``.
    """
    n = state.n
    t = eps / n if method == "trotter" else 0.0
    estimate = _estimator(method, state, n, t)
    exact = exact_boundary_expectation(state)
    bias = estimate(ShotConfig.infinite())[0] - exact

    def budget(shots: int) -> tuple[float, float]:
        _, err = estimate(ShotConfig(shots, _cell_seed(seed, method, eps_index, shots)))
        return abs(bias) + err, err

    def row(shots, err):
        return ScalingRow(method, n, t, eps, seed, shots, bias, err, abs(bias) + err)

    if abs(bias) >= eps:
        return row(None, math.inf)
    lo, hi = 0, MIN_SHOTS
    total, err = budget(hi)
    while total > eps:
        lo = hi
        hi *= 2
        if hi > shot_cap:
            return row(None, err)
        total, err = budget(hi)
    hi_err = err
    while hi - lo > 1:
        mid = (lo + hi) // 2
        total, err = budget(mid)
        if total <= eps:
            hi, hi_err = mid, err
        else:
            lo = mid
    return row(hi, hi_err)


def scaling_experiment(
    n: int,
    eps_grid: Sequence[float],
    seeds: Iterable[int],
    state: StateVector | str = "haar",
    state_seed: int = 0,
    shot_cap: int = DEFAULT_SHOT_CAP,
    methods: Sequence[str] = METHODS,
) -> ScalingReport:
    """Required shots per (method, eps, seed); the Trotter step is ``t = eps / n``."""
    if isinstance(state, str):
        state = state_catalog(n, state_seed)[state]
    seeds = list(seeds)
    report = ScalingReport(shot_cap=shot_cap)
    for method in methods:
        if method not in METHODS:
            raise ValueError(f"unknown method {method!r}")
        for k, eps in enumerate(eps_grid):
            for seed in seeds:
                report.rows.append(required_shots(method, state, eps, seed, k, shot_cap))
    return report
