"""Command-line interface.

    invbaxter count formula --n 1 --k 0 --p 1 --r 1
    invbaxter count fpf --n 4 --method paths
    invbaxter count census --size 6 --format csv
    invbaxter verify bijection --max-size 8 --jobs 4

Exit codes: 0 success, 1 verification mismatch, 2 usage error,
3 enumeration bound exceeded.
"""

import argparse
import csv
import io
import json
import os
import sys

from . import closed_forms as cf
from . import perm_core as pc
from . import verify as vf
from . import walks as wk
from .errors import CapacityError, ContractError

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3

MAX_BRUTE_SIZE = int(os.environ.get("INVBAXTER_MAX_SIZE", 14))


def _fpf_count(n: int, method: str) -> int:
    if method == "formula":
        return cf.b_fpf(n)
    if method == "paths":
        return sum(wk.walk_tuple_count(prof) for prof in cf.feasible_profiles(n, 0))
    if 2 * n > MAX_BRUTE_SIZE:
        raise CapacityError(f"brute force limited to size {MAX_BRUTE_SIZE}, asked for {2 * n}")
    return sum(1 for _ in pc.involutive_baxter(2 * n, fixed_point_free=True))


def _stringify(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {k: _stringify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_stringify(v) for v in value]
    return value


def _table(columns, rows) -> str:
    cells = [[str(c) for c in columns]] + [[str(r[c]) for c in columns] for r in rows]
    widths = [max(len(row[j]) for row in cells) for j in range(len(columns))]
    return "\n".join("  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells)


def _csv(columns, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for r in rows:
        writer.writerow([r[c] for c in columns])
    return buf.getvalue().rstrip("\n")


def emit(args, columns, rows, status="ok", counterexample=None, scalar=None) -> None:
    """Print a command result in the requested format."""
    command = " ".join(args.command_path)
    if args.format == "json":
        doc = {
            "command": command,
            "parameters": _stringify(args.parameters),
            "results": _stringify(rows),
            "status": status,
        }
        if counterexample is not None:
            doc["counterexample"] = _stringify(counterexample)
        print(json.dumps(doc, indent=2, sort_keys=False))
        return
    if args.format == "csv":
        print(_csv(columns, rows))
        if counterexample is not None:
            print(json.dumps({"counterexample": _stringify(counterexample)}), file=sys.stderr)
        return
    if scalar is not None:
        print(scalar)
        return
    print(_table(columns, rows))
    if status != "ok":
        print(f"status: {status}")
    if counterexample is not None:
        print("counterexample: " + json.dumps(_stringify(counterexample)))


def cmd_count(args) -> int:
    if args.what == "formula":
        prof = pc.ParameterProfile(args.n, args.k, args.p, args.r)
        if prof.n < 1 or min(prof) < 0:
            raise ContractError("need n >= 1 and non-negative k, p, r")
        value = cf.a_multi(prof)
        emit(args, ["n", "k", "p", "r", "count"], [dict(prof._asdict(), count=value)], scalar=value)
    elif args.what == "fpf":
        if args.n < 1:
            raise ContractError("need n >= 1")
        value = _fpf_count(args.n, args.method)
        emit(args, ["n", "method", "count"], [dict(n=args.n, method=args.method, count=value)], scalar=value)
    else:
        if args.size < 0:
            raise ContractError("size must be non-negative")
        if args.size > MAX_BRUTE_SIZE:
            raise CapacityError(f"census limited to size {MAX_BRUTE_SIZE}")
        rows = [dict(prof._asdict(), count=c) for prof, c in pc.profile_census(args.size).items()]
        emit(args, ["n", "k", "p", "r", "count"], rows)
    return EXIT_OK


def cmd_verify(args) -> int:
    kwargs = {k: v for k, v in args.parameters.items() if k != "jobs" and v is not None}
    try:
        result = vf.SUITES[args.suite](jobs=args.jobs, **kwargs)
    except ContractError as exc:
        # a broken internal contract falsifies the suite, it is not a usage error
        emit(args, ["error"], [], "mismatch", {"error": str(exc)})
        return EXIT_MISMATCH
    status = "verified" if result.ok else "mismatch"
    emit(args, result.columns, result.rows, status, result.counterexample)
    return EXIT_OK if result.ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "csv", "json"], default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")

    parser = argparse.ArgumentParser(prog="invbaxter", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="exact counts")
    csub = count.add_subparsers(dest="what", required=True)
    p = csub.add_parser("formula", parents=[common], help="multivariate closed form")
    for name in "nkpr":
        p.add_argument(f"--{name}", type=int, required=True)
    p = csub.add_parser("fpf", parents=[common], help="fixed-point-free total of size 2n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["formula", "paths", "brute"], default="formula")
    p = csub.add_parser("census", parents=[common], help="brute-force counts by profile")
    p.add_argument("--size", type=int, required=True)
    count.set_defaults(func=cmd_count)

    ver = sub.add_parser("verify", help="exhaustive checks")
    vsub = ver.add_subparsers(dest="suite", required=True)
    p = vsub.add_parser("bijection", parents=[common])
    p.add_argument("--max-size", type=int, default=8)
    p = vsub.add_parser("formula", parents=[common])
    p.add_argument("--max-size", type=int, default=10)
    p = vsub.add_parser("involution", parents=[common])
    p.add_argument("--max-n", type=int, default=7)
    p = vsub.add_parser("sinkcode", parents=[common])
    p.add_argument("--max-i", type=int, default=8)
    p = vsub.add_parser("lgv", parents=[common])
    p.add_argument("--max-steps", type=int, default=18)
    p.add_argument("--random-count", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-size", type=int, default=None,
                   help="walk-tuple profiles up to 2n+p (default: all that fit --max-steps)")
    p = vsub.add_parser("identities", parents=[common])
    p.add_argument("--max-n", type=int, default=20)
    p.add_argument("--max-size", type=int, default=None, help="integrality range (default 2*max-n)")
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    leaf = args.what if args.command == "count" else args.suite
    args.command_path = [args.command, leaf]
    args.parameters = {
        k: v for k, v in vars(args).items()
        if k not in ("command", "what", "suite", "func", "format", "jobs", "command_path")
    }
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"invbaxter: capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ContractError as exc:
        print(f"invbaxter: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
