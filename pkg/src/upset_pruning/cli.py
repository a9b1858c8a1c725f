"""Command-line interface.

Exit codes: 0 success, 1 failed verification, 2 parse error, 3 validation error.
"""
from __future__ import annotations

import argparse
import sys

from . import io
from .ci import DEFAULT_MAX_R, interleaving_distance_bruteforce
from .distances import bottleneck_distance, pruning_distance
from .modules import random_module
from .pruning import build_graph, prune
from .upsets import DimensionMismatch, EmptyGenerators

EXIT_PARSE = 2
EXIT_INVALID = 3


class CLIError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _rational(text: str):
    try:
        return io.parse_rational(text)
    except io.ParseError as e:
        raise CLIError(EXIT_PARSE, str(e)) from None


def _nonneg(text: str, what: str):
    x = _rational(text)
    if x < 0:
        raise CLIError(EXIT_INVALID, f"{what} must be >= 0, got {x}")
    return x


def _load(path):
    try:
        return io.read_module(path)
    except io.ParseError as e:
        raise CLIError(EXIT_PARSE, f"{path}: {e}") from None
    except (io.ValidationError, DimensionMismatch, EmptyGenerators) as e:
        raise CLIError(EXIT_INVALID, f"{path}: {e}") from None
    except OSError as e:
        raise CLIError(EXIT_PARSE, f"{path}: {e.strerror}") from None


def _emit(text: str, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_prune(args):
    M = _load(args.input)
    alpha = _nonneg(args.alpha, "alpha")
    _emit(io.dumps(prune(M, alpha)), args.output)


def _pair(args):
    M, N = _load(args.first), _load(args.second)
    if not M.is_zero and not N.is_zero and M.dim != N.dim:
        raise CLIError(EXIT_INVALID, f"dimension {M.dim} != {N.dim}")
    return M, N


def cmd_dp(args):
    M, N = _pair(args)
    tol = _rational(args.tol)
    if tol <= 0:
        raise CLIError(EXIT_INVALID, "--tol must be positive")
    print(pruning_distance(M, N, tol=tol, mode="exact" if args.exact else "bisect"))


def cmd_db(args):
    M, N = _pair(args)
    print(bottleneck_distance(M, N))


def cmd_di(args):
    M, N = _pair(args)
    if len(M) == len(N) and len(M) > args.max_r:
        raise CLIError(EXIT_INVALID, f"r = {len(M)} exceeds --max-r {args.max_r}")
    print(interleaving_distance_bruteforce(M, N, field=args.field, max_r=args.max_r))


def cmd_graph(args):
    M = _load(args.input)
    alpha = _nonneg(args.alpha, "alpha")
    if M.is_zero:
        raise CLIError(EXIT_INVALID, "the zero module has no shift graph")
    _emit(io.to_dot(build_graph(M, alpha)), args.output)


def cmd_gen(args):
    try:
        M = random_module(args.seed, args.r, args.dim, args.gens, args.coord_bound)
    except ValueError as e:
        raise CLIError(EXIT_INVALID, str(e)) from None
    _emit(io.dumps(M), args.output)


def cmd_plot(args):
    modules = [_load(p) for p in args.inputs]
    try:
        svg = io.to_svg(modules)
    except io.ValidationError as e:
        raise CLIError(EXIT_INVALID, str(e)) from None
    _emit(svg, args.output)


def cmd_verify(args):
    from .verify import run_checks

    results = run_checks()
    width = max(len(c.name) for c in results)
    for c in results:
        status = "PASS" if c.ok else "FAIL"
        print(f"{status}  {c.name:<{width}}  {c.detail}".rstrip())
    failed = sum(not c.ok for c in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="upset-pruning",
        description="Prunings and distances of upset-decomposable persistence modules.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("prune", help="write the alpha-pruning of a module")
    p.add_argument("input")
    p.add_argument("alpha")
    p.add_argument("output", nargs="?", default=None)
    p.set_defaults(func=cmd_prune)

    for name, func, helptext in [
        ("dp", cmd_dp, "pruning distance"),
        ("db", cmd_db, "bottleneck distance"),
        ("di", cmd_di, "interleaving distance (brute force, small r)"),
    ]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("first")
        p.add_argument("second")
        p.add_argument("--tol", default="1/1000000000")
        p.add_argument("--exact", action="store_true")
        p.add_argument("--field", choices=["f2", "f3"], default="f2")
        p.add_argument("--max-r", type=int, default=DEFAULT_MAX_R)
        p.set_defaults(func=func)

    p = sub.add_parser("graph", help="DOT export of the shift graph G(M, alpha)")
    p.add_argument("input")
    p.add_argument("alpha")
    p.add_argument("--dot", action="store_true", help="DOT output (the only format)")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("gen", help="write a deterministic random module")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--gens", type=int, default=3)
    p.add_argument("--coord-bound", type=int, default=16)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("plot", help="SVG of the staircases of planar modules")
    p.add_argument("inputs", nargs="+")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("verify", help="run the built-in verification corpus")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args) or 0
    except CLIError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code


if __name__ == "__main__":
    sys.exit(main())
