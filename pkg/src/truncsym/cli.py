"""Command-line interface.  Every command prints one JSON envelope:

    {"command": ..., "parameters": {...}, "result": ..., "elapsed_ms": ...}

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import bases, petrie, verify
from .bases import HD, Basis, SymFunc, convert
from .partition import Partition, Truncation, enumerate_partitions, truncation


class UsageError(Exception):
    pass


def _truncation_arg(text: str) -> Truncation:
    try:
        return truncation(text)
    except (TypeError, ValueError):
        raise argparse.ArgumentTypeError(f"expected a positive integer or 'inf', got {text!r}") from None


def _finite_arg(text: str) -> int:
    d = _truncation_arg(text)
    if d.is_infinite:
        raise argparse.ArgumentTypeError("this command needs a finite d")
    return d.value


def _partition_arg(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {n}")
    return n


def cmd_partitions(args):
    return [str(lam) for lam in enumerate_partitions(args.n)], 0


def cmd_expand(args):
    f = SymFunc.element(HD(args.d), args.lam)
    return convert(f, Basis(args.basis)).to_json(), 0


def cmd_matrix(args):
    return bases.transition_hd(args.n, args.d, Basis(args.target)).to_json(), 0


def cmd_count(args):
    if args.mode == petrie.CONGRUENT and args.d.is_infinite:
        raise UsageError("congruent mode needs a finite d")
    return petrie.count_matrices(args.d, args.row, args.col, args.mode), 0


def cmd_petrie(args):
    if args.method == "det":
        return petrie.petrie_coefficient_det(args.d, args.lam), 0
    if args.method == "rule":
        return petrie.petrie_coefficient_rule(args.d, args.lam), 0
    det = petrie.petrie_coefficient_det(args.d, args.lam)
    rule = petrie.petrie_coefficient_rule(args.d, args.lam)
    return {"det": det, "rule": rule, "agree": det == rule}, int(det != rule)


def cmd_verify(args):
    report = verify.run_suite(args.suite, args.max_n, args.max_d)
    return report, 0 if report["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="truncsym", description="Truncated homogeneous symmetric functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partitions", help="list the partitions of n in canonical order")
    p.add_argument("--n", type=_nonneg, required=True)
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("expand", help="expand h_lambda^[d] in a classical basis")
    p.add_argument("--d", type=_truncation_arg, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--basis", choices=["m", "e", "h", "p", "s"], default="m")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("matrix", help="transition matrix M(h^[d], target)")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--d", type=_truncation_arg, required=True)
    p.add_argument("--target", choices=["m", "e", "h", "p", "s"], default="m")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("count", help="count matrices with given row and column sums")
    p.add_argument("--d", type=_truncation_arg, required=True)
    p.add_argument("--row", type=_partition_arg, required=True)
    p.add_argument("--col", type=_partition_arg, required=True)
    p.add_argument("--mode", choices=[petrie.BOUNDED, petrie.CONGRUENT], default=petrie.BOUNDED)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("petrie", help="coefficient of s_lambda in sum_n h_n^[d]")
    p.add_argument("--d", type=_finite_arg, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--method", choices=["det", "rule", "both"], default="det")
    p.set_defaults(func=cmd_petrie)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=list(verify.SUITES) + ["all"], default="all")
    p.add_argument("--max-n", type=_nonneg, default=6)
    p.add_argument("--max-d", type=_nonneg, default=3)
    p.set_defaults(func=cmd_verify)
    return parser


def _parameters(args) -> dict:
    out = {}
    for key, value in vars(args).items():
        if key in ("func", "command"):
            continue
        out["lambda" if key == "lam" else key] = value if isinstance(value, (int, type(None))) else str(value)
    return out


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        result, code = args.func(args)
    except UsageError as exc:
        print(f"truncsym {args.command}: error: {exc}", file=sys.stderr)
        return 2
    envelope = {
        "command": args.command,
        "parameters": _parameters(args),
        "result": result,
        "elapsed_ms": round((time.perf_counter() - start) * 1000, 3),
    }
    print(json.dumps(envelope))
    return code


if __name__ == "__main__":
    sys.exit(main())
