"""Command-line entry point: ``wfs solve|check|bench|gen``."""

from __future__ import annotations

import argparse
import random
import sys

from . import bench
from .core import NotLp1Error
from .generators import ALIASES, FAMILIES, GeneratorSpec, generate, random_lp1
from .oracle import naive_wfs
from .solver import ALGORITHMS, solve, solve_alg2, solve_alg3, solve_vg
from .textio import ParseError, TraceWriter, format_program, parse, serialize_result

EXIT_OK, EXIT_PARSE, EXIT_NOT_LP1, EXIT_MISMATCH = 0, 1, 2, 3


def cmd_solve(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            program = parse(fh.read())
    except ParseError as e:
        print(f"{args.file}: {e}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as e:
        print(f"{args.file}: {e.strerror}", file=sys.stderr)
        return EXIT_PARSE
    trace_fh = open(args.trace_json, "w", encoding="utf-8") if args.trace_json else None
    try:
        trace = TraceWriter(trace_fh, program.names) if trace_fh else None
        result, _ = solve(program, args.algorithm, fallback=args.fallback, trace=trace)
    except NotLp1Error as e:
        print(f"{args.file}: {e} (use --fallback or another --algorithm)", file=sys.stderr)
        return EXIT_NOT_LP1
    finally:
        if trace_fh:
            trace_fh.close()
    out = serialize_result(result, args.format)
    sys.stdout.write(out if out.endswith("\n") else out + "\n")
    return EXIT_OK


def check_program(program) -> bool:
    expected = naive_wfs(program)
    return (
        solve_vg(program) == expected
        and solve_alg2(program) == expected
        and solve_alg3(program)[0] == expected
    )


def cmd_check(args) -> int:
    rng = random.Random(args.seed)
    for i in range(args.count):
        n = rng.randint(1, args.max_atoms)
        m = rng.randint(0, args.max_rules)
        program = random_lp1(n, m, args.p_neg, rng.randrange(2**32))
        if not check_program(program):
            print(f"mismatch on program {i}:", file=sys.stderr)
            sys.stdout.write(format_program(program))
            return EXIT_MISMATCH
    print(f"ok: {args.count} programs agree")
    return EXIT_OK


def _sizes(text: str) -> list[int]:
    return [int(float(x)) for x in text.split(",") if x.strip()]


def cmd_bench(args) -> int:
    algorithms = [a.strip() for a in args.algorithms.split(",") if a.strip()]
    for a in algorithms:
        if a not in ALGORITHMS:
            print(f"unknown algorithm {a!r}", file=sys.stderr)
            return 1
    extra = {"k": args.k} if args.k else {}
    bench.write_csv(bench.run(args.family, _sizes(args.sizes), algorithms, args.reps, extra), sys.stdout)
    return EXIT_OK


def cmd_gen(args) -> int:
    extra = {"seed": args.seed, "p_neg": args.p_neg}
    if args.k:
        extra["k"] = args.k
    if args.m is not None:
        extra["m"] = args.m
    sys.stdout.write(format_program(generate(GeneratorSpec(args.family, args.n, extra))))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wfs", description="Well-founded semantics of propositional normal programs.")
    sub = parser.add_subparsers(dest="command", required=True)
    families = list(FAMILIES) + list(ALIASES)

    p = sub.add_parser("solve", help="compute the well-founded model of a program file")
    p.add_argument("file")
    p.add_argument("--algorithm", choices=ALGORITHMS, default="vg")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--fallback", action="store_true",
                   help="solve non-LP1 programs with the bottom-up step instead of failing")
    p.add_argument("--trace-json", metavar="FILE", help="write solver events as JSON lines")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="cross-check all solvers against the naive oracle")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--max-atoms", type=int, default=30)
    p.add_argument("--max-rules", type=int, default=120)
    p.add_argument("--p-neg", type=float, default=0.2)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bench", help="time the solvers on a generator family (CSV)")
    p.add_argument("--family", choices=families, default="chain")
    p.add_argument("--sizes", default="1000,2000,4000")
    p.add_argument("--algorithms", default="vg,topdown")
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--k", type=int, default=0, help="ballast width (default n)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen", help="print a generated program")
    p.add_argument("--family", choices=families, required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--m", type=int)
    p.add_argument("--p-neg", type=float, default=0.2)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
