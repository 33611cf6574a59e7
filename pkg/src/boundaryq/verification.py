"""The identity suite behind ``boundaryq verify``."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
import scipy.linalg

from .circuit import unitary_of
from .fermionic import full_boundary_fermionic, full_boundary_recurrence, hermitian_boundary
from .pauli import anticommutes, majorana_x, to_dense, to_sparse
from .simplicial import full_boundary_oracle, parity_string, restricted_boundary
from .unitary_partitioning import (
    RotationCascade,
    build_cascade,
    conjugate_check,
    evolution_circuit,
    restricted_from_hermitian,
)

CONJUGATE_TOL = 1e-10
EVOLUTION_TOL = 1e-8
EVOLUTION_TIMES = (0.0, 0.37, 1.3, -2.1, 7.9)


@dataclass(frozen=True)
class CheckResult:
    name: str
    n: int
    passed: bool
    detail: str = ""


def _sparse_equal(a, b) -> bool:
    diff = (a - b).tocsc()
    diff.eliminate_zeros()
    return diff.nnz == 0


def three_way_equality(n: int) -> tuple[bool, str]:
    oracle = full_boundary_oracle(n)
    fermionic = to_sparse(full_boundary_fermionic(n))
    recurrence = full_boundary_recurrence(n)
    ok = _sparse_equal(fermionic, oracle) and _sparse_equal(recurrence, oracle)
    return ok, f"nnz={oracle.nnz}"


def nilpotency(n: int) -> tuple[bool, str]:
    d = full_boundary_oracle(n)
    sq = d @ d
    sq.eliminate_zeros()
    return sq.nnz == 0, f"nnz(d^2)={sq.nnz}"


def parity_anticommutation(n: int) -> tuple[bool, str]:
    d = full_boundary_oracle(n)
    z = parity_string(n)
    acomm = z @ d + d @ z
    acomm.eliminate_zeros()
    return acomm.nnz == 0, f"nnz={acomm.nnz}"


def term_anticommutation(n: int) -> tuple[bool, str]:
    qs = [majorana_x(i, n) for i in range(n)]
    pairs = [(i, j) for i in range(n) for j in range(i)]
    symbolic = all(anticommutes(qs[i], qs[j]) for i, j in pairs)
    mats = [to_sparse(q) for q in qs]
    matrix = all((mats[i] @ mats[j] + mats[j] @ mats[i]).count_nonzero() == 0 for i, j in pairs)
    return symbolic and matrix, f"pairs={len(pairs)}"


def conjugation(n: int, cascade: Optional[RotationCascade] = None) -> tuple[bool, str]:
    res = conjugate_check(n, cascade)
    return res <= CONJUGATE_TOL, f"residual={res:.3e}"


def projector_reconstruction(n: int) -> tuple[bool, str]:
    ok = all(
        _sparse_equal(restricted_from_hermitian(k, n), restricted_boundary(k, n))
        for k in range(1, n + 1)
    )
    return ok, f"k=1..{n}"


def evolution_identity(n: int, cascade: Optional[RotationCascade] = None) -> tuple[bool, str]:
    b = to_dense(hermitian_boundary(n))
    worst = 0.0
    for t in EVOLUTION_TIMES:
        u = unitary_of(evolution_circuit(n, t, cascade))
        worst = max(worst, float(np.linalg.norm(u - scipy.linalg.expm(-1j * t * b))))
    return worst <= EVOLUTION_TOL, f"max residual={worst:.3e}"


CHECKS: dict[str, Callable] = {
    "three_way_equality": three_way_equality,
    "nilpotency": nilpotency,
    "parity_anticommutation": parity_anticommutation,
    "term_anticommutation": term_anticommutation,
    "conjugate_check": conjugation,
    "projector_reconstruction": projector_reconstruction,
    "evolution_identity": evolution_identity,
}


def faulty_cascade(n: int) -> RotationCascade:
    """The cascade with its first angle negated, for exercising the harness."""
    cascade = build_cascade(n)
    if not cascade.steps:
        return cascade
    (i, theta), *rest = cascade.steps
    return RotationCascade(n, ((i, -theta), *rest))


def run_identity_suite(n_max: int, flip_angle: bool = False) -> list[CheckResult]:
    results = []
    for n in range(1, n_max + 1):
        cascade = faulty_cascade(n) if flip_angle else None
        for name, check in CHECKS.items():
            if name in ("conjugate_check", "evolution_identity"):
                ok, detail = check(n, cascade)
            else:
                ok, detail = check(n)
            results.append(CheckResult(name, n, bool(ok), detail))
    return results


def format_table(results: list[CheckResult]) -> str:
    width = max(len(name) for name in CHECKS)
    lines = [f"{'identity':<{width}}  n   status  detail"]
    for r in results:
        lines.append(f"{r.name:<{width}}  {r.n:<2}  {'PASS' if r.passed else 'FAIL':<6}  {r.detail}")
    return "\n".join(lines) + "\n"


def closed_form_evolution(n: int, t: float) -> np.ndarray:
    """``cos(sqrt(n) t) I - i sin(sqrt(n) t)/sqrt(n) B``, valid because ``B^2 = n I``."""
    b = to_dense(hermitian_boundary(n))
    r = math.sqrt(n)
    return math.cos(r * t) * np.eye(1 << n) - 1j * math.sin(r * t) / r * b
