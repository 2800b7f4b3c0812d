"""Command line: ``weakparity {solve,verify,gen,bench}``.

Exit codes: 0 success, 1 usage / I/O / parse errors, 2 failed verification.
"""

from __future__ import annotations

import argparse
import sys

from . import bench
from .errors import GameError, MalformedStrategy
from .gameio import parse_game, parse_solution, write_game, write_solution
from .generators import FAMILIES, GenSpec, ladder_family, random_game
from .reference import DEFAULT_PAIR_LIMIT, bruteforce_solution, verify_strategy

EXIT_OK, EXIT_ERROR, EXIT_UNVERIFIED = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def run_solve(args) -> int:
    g = parse_game(_read(args.input))
    if args.algo == "brute":
        engine = lambda game: bruteforce_solution(game, args.limit)  # noqa: E731
    else:
        engine = bench.ENGINES[args.algo]
    sol, ns = bench.timed(engine, g)
    _write(args.out, write_solution(g, sol, work=False))
    if args.stats:
        w = sol.work
        print(f"edge_relaxations={w.edge_relaxations} counter_inits={w.counter_inits} "
              f"target_scan_steps={w.target_scan_steps} renaming_steps={w.renaming_steps} "
              f"rescan_steps={w.rescan_steps} wall_ns={ns}", file=sys.stderr)
    return EXIT_OK


def run_verify(args) -> int:
    g = parse_game(_read(args.input))
    sol = parse_solution(_read(args.solution), g)
    try:
        report = verify_strategy(g, sol)
    except MalformedStrategy as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_UNVERIFIED
    if report.ok:
        print("ok")
        return EXIT_OK
    who, state = report.counterexample
    if who is None:
        print(f"verification failed: state {state} is not in exactly one region", file=sys.stderr)
    else:
        print(f"verification failed: {who} strategy does not win from state {state}",
              file=sys.stderr)
    return EXIT_UNVERIFIED


def run_gen(args) -> int:
    if args.family == "ladder":
        g = ladder_family(args.states)
    else:
        g = random_game(GenSpec(n=args.states, avg_degree=args.avg_degree, d=args.priorities,
                                owner_ratio=args.owner_ratio, seed=args.seed))
    _write(args.out, write_game(g))
    return EXIT_OK


def run_bench(args) -> int:
    sizes = [int(x) for x in args.sizes.split(",")]
    algos = args.algo.split(",")
    report = bench.run_scaling(args.family, sizes, algos, args.repeats, args.seed)
    if args.csv in (None, "-"):
        bench.write_csv(report.samples, sys.stdout)
    else:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            bench.write_csv(report.samples, fh)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="weakparity", description="Solve and verify weak-parity games.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="compute winning regions and strategies")
    s.add_argument("--in", dest="input", required=True, help="game file, '-' for stdin")
    s.add_argument("--out", help="solution file (default stdout)")
    s.add_argument("--algo", choices=sorted(bench.ENGINES), default="linear")
    s.add_argument("--stats", action="store_true", help="print work counters to stderr")
    s.add_argument("--limit", type=int, default=DEFAULT_PAIR_LIMIT,
                   help="strategy-pair limit for --algo brute")
    s.set_defaults(func=run_solve)

    v = sub.add_parser("verify", help="check a solution against its game")
    v.add_argument("--in", dest="input", required=True, help="game file")
    v.add_argument("--solution", required=True, help="solution file")
    v.set_defaults(func=run_verify)

    gen = sub.add_parser("gen", help="write a generated game")
    gen.add_argument("--family", choices=FAMILIES, default="random")
    gen.add_argument("--states", type=int, required=True)
    gen.add_argument("--priorities", type=int, default=4)
    gen.add_argument("--avg-degree", type=float, default=2.0)
    gen.add_argument("--owner-ratio", type=float, default=0.5)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out")
    gen.set_defaults(func=run_gen)

    b = sub.add_parser("bench", help="run a scaling experiment, write CSV")
    b.add_argument("--family", choices=FAMILIES, default="ladder")
    b.add_argument("--sizes", required=True, help="comma-separated, each double the last")
    b.add_argument("--algo", default="linear,naive", help="comma-separated engines")
    b.add_argument("--repeats", type=int, default=1)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--csv", help="output path (default stdout)")
    b.set_defaults(func=run_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GameError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
