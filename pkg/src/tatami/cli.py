"""Command-line entry point: ``tatami {subsets,square,strip,oracle,bench}``.

Exit codes: 0 on success, 2 for bad arguments, 3 when a size guard refuses
the request.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import bench
from .grid import Kind, render_ascii, render_svg, serialize_tiles
from .ksum import format_subset, gen_ksum, init_c4
from .oracle import Classify, GuardError, OracleQuery, enumerate_coverings, square_query
from .square import count_vd, gen_vh, render_square, serialize_vh
from .strip import count_strip, format_strip, gen_strip, render_strip_schematic

EXIT_USAGE = 2
EXIT_GUARD = 3


class UsageError(Exception):
    pass


def _out(line: str = ""):
    sys.stdout.write(line + "\n")


def cmd_subsets(args):
    if args.n < 0:
        raise UsageError(f"n must be non-negative, got {args.n}")
    state = init_c4(args.n)
    if args.count:
        _out(str(gen_ksum(state, args.n, args.k)))
        return
    gen_ksum(state, args.n, args.k, lambda v: _out(format_subset(v)))


def cmd_square(args):
    n, k = args.n, args.k
    if n < 2:
        raise UsageError(f"n must be at least 2, got {n}")
    if n % 2 and args.render != "repr":
        raise UsageError(f"--render={args.render} needs even n; odd n supports only repr and --count")
    if args.count:
        _out(str(count_vd(n, k)))
        return
    if args.render == "repr":
        gen_vh(n, k, lambda e: _out(serialize_vh(e)))
        return
    draw = {"ascii": render_ascii, "svg": render_svg, "tiles": serialize_tiles}[args.render]
    first = True

    def show(e):
        nonlocal first
        if not first:
            _out()
        first = False
        sys.stdout.write(draw(render_square(e, n)))

    gen_vh(n, k, show)


def cmd_strip(args):
    r, n = args.r, args.n
    if r < 2:
        raise UsageError(f"strip height must be at least 2, got {r}")
    if n < 0:
        raise UsageError(f"feature count must be non-negative, got {n}")
    if args.count:
        _out(" ".join(map(str, count_strip(r, n))))
        return
    if args.render == "schematic":
        first = True

        def show(s):
            nonlocal first
            if not first:
                _out()
            first = False
            sys.stdout.write(render_strip_schematic(s, args.margin))

        gen_strip(r, n, show)
    else:
        gen_strip(r, n, lambda s: _out(format_strip(s)))


def cmd_oracle(args):
    if args.shape == "square":
        if args.n < 1:
            raise UsageError("n must be positive")
        q = square_query(args.n)
        want = args.k
    else:
        try:
            q = OracleQuery(
                args.rows, args.cols, args.monominoes, args.top_corners, Classify(args.classify)
            )
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        want = None

    stream = None
    first = True
    if args.tiles:

        def stream(c):
            nonlocal first
            if want is not None and _class_of(c, q) != want:
                return
            if not first:
                _out()
            first = False
            sys.stdout.write(serialize_tiles(c))

    hist = enumerate_coverings(q, stream, allow_large=args.allow_large)
    if args.tiles and not first:
        _out()
    if q.classify_by is not Classify.NONE:
        for key in sorted(hist):
            _out(f"{key} {hist[key]}")
    _out(f"total {sum(hist.values())}")


def _class_of(c, q):
    if q.classify_by is Classify.VERTICAL:
        return c.count(Kind.VDOMINO)
    if q.classify_by is Classify.HORIZONTAL:
        return c.count(Kind.HDOMINO)
    return None


def cmd_bench(args):
    target = args.target
    limit = args.limit
    if target == "subsets":
        ns = args.n or [20]
        for n in ns:
            if n < 0:
                raise UsageError("n must be non-negative")
            for k in args.k if args.k is not None else bench.subsets_points(n):
                _out(bench.bench_subsets(n, k, limit).format())
    elif target == "square":
        for n in args.n or [16]:
            if n < 2:
                raise UsageError("n must be at least 2")
            for k in args.k if args.k is not None else bench.square_points(n):
                _out(bench.bench_square(n, k, limit).format())
    elif target == "strip":
        for r in args.r or [4]:
            if r < 2:
                raise UsageError("strip height must be at least 2")
            for n in args.n or [8]:
                _out(bench.bench_strip(r, n, limit).format())
    else:
        raise UsageError(f"unknown bench target {target!r}; choose subsets, square or strip")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tatami", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("subsets", help="subsets of {1..n} summing to k")
    s.add_argument("n", type=int)
    s.add_argument("k", type=int)
    s.add_argument("--count", action="store_true")
    s.set_defaults(func=cmd_subsets)

    s = sub.add_parser("square", help="n x n coverings with n monominoes and k vertical dominoes")
    s.add_argument("n", type=int)
    s.add_argument("k", type=int)
    s.add_argument("--count", action="store_true")
    s.add_argument("--render", choices=["repr", "ascii", "svg", "tiles"], default="repr")
    s.set_defaults(func=cmd_square)

    s = sub.add_parser("strip", help="height-r strip coverings with n features")
    s.add_argument("r", type=int)
    s.add_argument("n", type=int)
    s.add_argument("--count", action="store_true", help="print V H R")
    s.add_argument("--render", choices=["codes", "schematic"], default="codes")
    s.add_argument("--margin", type=int, default=3)
    s.set_defaults(func=cmd_strip)

    s = sub.add_parser("oracle", help="brute-force tatami enumeration")
    osub = s.add_subparsers(dest="shape", required=True)
    o = osub.add_parser("square", help="n x n, n monominoes, top corners")
    o.add_argument("n", type=int)
    o.add_argument("k", type=int, nargs="?", help="only stream coverings of this class")
    o.add_argument("--tiles", action="store_true")
    o.add_argument("--allow-large", action="store_true")
    o.set_defaults(func=cmd_oracle)
    o = osub.add_parser("rect", help="arbitrary rectangle")
    o.add_argument("rows", type=int)
    o.add_argument("cols", type=int)
    o.add_argument("--monominoes", type=int, default=None)
    o.add_argument("--top-corners", action="store_true")
    o.add_argument("--classify", choices=[c.value for c in Classify], default="vertical")
    o.add_argument("--tiles", action="store_true")
    o.add_argument("--allow-large", action="store_true")
    o.set_defaults(func=cmd_oracle)

    s = sub.add_parser("bench", help="step-count benchmark")
    s.add_argument("target", help="subsets, square or strip")
    s.add_argument("--n", type=int, action="append")
    s.add_argument("--k", type=int, action="append")
    s.add_argument("--r", type=int, action="append")
    s.add_argument("--limit", type=int, default=None, help="stop each run after this many outputs")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"tatami: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GuardError, OverflowError) as exc:
        print(f"tatami: refused: {exc}", file=sys.stderr)
        return EXIT_GUARD
    return 0


if __name__ == "__main__":
    sys.exit(main())
