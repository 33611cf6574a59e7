"""Command-line entry point: ``boundaryq {build,verify,emit,simulate,bench}``.

Exit codes: 0 success, 1 verification failure, 2 usage or resource error.
"""
from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path
from typing import Optional, Sequence

from ._config import ResourceLimitError
from .circuit import depth_and_counts, emit_text
from .estimation import analytic_estimate, exact_boundary_expectation, scaling_experiment, trotter_estimate
from .fermionic import full_boundary_fermionic, full_boundary_recurrence, hermitian_boundary
from .pauli import format_operator_sum, to_sparse
from .simplicial import format_sparse, full_boundary_oracle
from .simulator import ShotConfig, state_catalog
from .unitary_partitioning import analytic_boundary_circuit, central_rz_angle, evolution_circuit
from .verification import format_table, run_identity_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MAX_VERIFY_N = 10


class UsageError(Exception):
    pass


def _write(text: str, output: Optional[str]) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)


def _positive_int(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def _seed(s: str) -> int:
    v = int(s)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError(f"seed must fit in 64 bits, got {s}")
    return v


def _eps_list(s: str) -> list[float]:
    try:
        vals = [float(x) for x in s.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if not vals or any(not (v > 0 and math.isfinite(v)) for v in vals):
        raise argparse.ArgumentTypeError(f"expected positive comma-separated errors, got {s}")
    return vals


def cmd_build(args) -> int:
    n = args.n
    if args.which == "fermionic":
        op = full_boundary_fermionic(n)
        text = format_sparse(to_sparse(op)) if args.densify else format_operator_sum(op)
    elif args.which == "hermitian":
        op = hermitian_boundary(n)
        text = format_sparse(to_sparse(op)) if args.densify else format_operator_sum(op)
    elif args.which == "oracle":
        text = format_sparse(full_boundary_oracle(n))
    else:
        text = format_sparse(full_boundary_recurrence(n))
    _write(text, args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n_max > MAX_VERIFY_N:
        raise UsageError(f"--n-max must be at most {MAX_VERIFY_N}")
    results = run_identity_suite(args.n_max, flip_angle=args.debug_flip_angle)
    sys.stdout.write(format_table(results))
    failed = sorted({r.name for r in results if not r.passed})
    if failed:
        sys.stdout.write("FAILED: " + ", ".join(failed) + "\n")
        return EXIT_FAIL
    sys.stdout.write("ALL PASS\n")
    return EXIT_OK


def cmd_emit(args) -> int:
    n = args.n
    comments = [f"target {args.target} n={n}"]
    if args.target == "analytic":
        circuit, scale = analytic_boundary_circuit(n)
        comments.append(f"scale {scale:.17g}")
    else:
        if args.t is None:
            raise UsageError("--t is required for --target evolution")
        circuit = evolution_circuit(n, args.t)
        comments.append(f"t {args.t:.17g}")
        comments.append(f"central rz angle {central_rz_angle(n, args.t):.17g}")
    depth, rotations = depth_and_counts(circuit)
    comments.append(f"depth {depth} rotations {rotations} gates {len(circuit)}")
    _write(emit_text(circuit, comments), args.output)
    stream = sys.stderr if args.output in (None, "-") else sys.stdout
    stream.write(f"depth\t{depth}\ntwo_qubit_rotations\t{rotations}\ngates\t{len(circuit)}\n")
    return EXIT_OK


def cmd_simulate(args) -> int:
    n = args.n
    state = state_catalog(n, args.state_seed)[args.state]
    cfg = ShotConfig.infinite() if args.exact else ShotConfig(args.shots, args.seed)
    if args.method == "analytic":
        est, err = analytic_estimate(state, n, cfg)
    else:
        if args.t is None or not args.t > 0:
            raise UsageError("--t > 0 is required for --method trotter")
        est, err = trotter_estimate(state, n, args.t, cfg)
    shots = "inf" if args.exact else str(args.shots)
    rows = [
        f"exact\t{exact_boundary_expectation(state):.17g}\t0\tinf\t{args.seed}",
        f"{args.method}\t{est:.17g}\t{err:.17g}\t{shots}\t{args.seed}",
    ]
    _write("label\testimate\tstderr\tshots\tseed\n" + "\n".join(rows) + "\n", args.output)
    return EXIT_OK


def cmd_bench(args) -> int:
    seeds = [args.seed + k for k in range(args.seeds)]
    report = scaling_experiment(
        args.n, args.eps, seeds, state=args.state, state_seed=args.state_seed, shot_cap=args.shot_cap
    )
    out = Path(args.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "report.tsv").write_text(report.to_tsv())
    (out / "summary.tsv").write_text(report.summary())
    for method in ("analytic", "trotter"):
        (out / f"{method}.dat").write_text(report.plot_data(method))
    sys.stdout.write(report.summary())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boundaryq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="write a boundary operator")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--which", choices=("fermionic", "oracle", "recurrence", "hermitian"), required=True)
    p.add_argument("--densify", action="store_true", help="write Pauli sums as sparse matrix triples")
    p.add_argument("--output")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="run the identity suite for n = 1..n-max")
    p.add_argument("--n-max", type=_positive_int, required=True)
    p.add_argument("--debug-flip-angle", action="store_true", help="negate the first cascade angle")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("emit", help="write a .bqc circuit")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--target", choices=("analytic", "evolution"), required=True)
    p.add_argument("--t", type=float)
    p.add_argument("--output")
    p.set_defaults(func=cmd_emit)

    p = sub.add_parser("simulate", help="estimate <B> on a catalog state")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--method", choices=("analytic", "trotter"), required=True)
    p.add_argument("--state", choices=("zeros", "uniform", "haar"), default="haar")
    p.add_argument("--state-seed", type=_seed, default=0)
    p.add_argument("--t", type=float)
    p.add_argument("--shots", type=_positive_int, default=10000)
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--exact", action="store_true", help="infinite-shot limit")
    p.add_argument("--output")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("bench", help="shot-scaling study, analytic vs Trotter")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--eps", type=_eps_list, required=True, help="comma-separated target errors")
    p.add_argument("--seeds", type=_positive_int, required=True, help="number of seeds")
    p.add_argument("--seed", type=_seed, required=True, help="first seed")
    p.add_argument("--state", choices=("zeros", "uniform", "haar"), default="haar")
    p.add_argument("--state-seed", type=_seed, default=0)
    p.add_argument("--shot-cap", type=_positive_int, default=10**10)
    p.add_argument("--output-dir", default="bench-out")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ResourceLimitError, ValueError) as exc:
        sys.stderr.write(f"boundaryq {args.command}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
