"""Command-line entry point.

Exit codes: 0 pass, 1 property violation, 2 input error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import sys

from . import families, harness
from .connectivity import DEFAULT_BUDGET
from .graph_core import GraphFormatError, SizeCapError, emit_graph6

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _seed(text: str) -> int:
    return int(text, 0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="factorcrit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full invariant report for one graph")
    p.add_argument("graph", help="family spec (circulant:7:1,2, kneser:7:3, ...) or graph6 line")
    p.add_argument("--verify-symmetry", action="store_true", help="search automorphisms even for certified families")
    p.add_argument("--json", action="store_true", help="emit JSON (the only format; accepted for compatibility)")
    p.add_argument("--seed", type=_seed, default=harness.DEFAULT_SEED)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="node budget per fragment search")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings (breaks byte-identity)")

    p = sub.add_parser("verify-theorem", help="sweep connected VT odd graphs for the 3-factor-critical characterisation")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--verify-symmetry", action="store_true")
    p.add_argument("--timings", action="store_true")

    p = sub.add_parser("verify-lemma", help="run one lemma's property suite over the generated corpus")
    p.add_argument("--id", required=True, choices=harness.LEMMA_IDS)
    p.add_argument("--max-order", type=int, default=15)
    p.add_argument("--seed", type=_seed, default=harness.DEFAULT_SEED)
    p.add_argument("--random", type=int, default=500, help="random graphs for ids 2.1 and 4")
    p.add_argument("--trials", type=int, default=500, help="random subsets per graph for id 3.2")

    p = sub.add_parser("oracle-check", help="cross-check fast paths against exhaustive oracles")
    p.add_argument("--random", type=int, default=200, help="random graphs per oracle corpus")
    p.add_argument("--no-families", action="store_true", help="drop the family graphs from the corpus")
    p.add_argument("--seed", type=_seed, default=harness.DEFAULT_SEED)

    p = sub.add_parser("generate", help="print a family graph")
    p.add_argument("spec")
    p.add_argument("--emit", choices=("graph6", "edges"), default="graph6")
    return parser


def _emit(report: dict) -> None:
    sys.stdout.write(harness.dumps(report) + "\n")


def run(args: argparse.Namespace) -> int:
    if args.command == "analyze":
        report = harness.analyze(
            args.graph, verify_symmetry=args.verify_symmetry, seed=args.seed, budget=args.budget, timings=args.timings
        )
        _emit(report)
        return EXIT_OK

    if args.command == "verify-theorem":
        if args.max_order % 2 == 0 or args.max_order < 5:
            raise GraphFormatError("--max-order must be odd and at least 5")
        report = harness.verify_theorem(
            args.max_order, threads=args.threads, verify_symmetry=args.verify_symmetry, timings=args.timings
        )
        _emit(report)
        for row in report["violations"]:
            print(f"violation: {row['family']} graph6={row['graph6']} X={row['witness']}", file=sys.stderr)
        return EXIT_OK if report["passed"] else EXIT_VIOLATION

    if args.command == "verify-lemma":
        report = harness.verify_lemma(
            args.id, max_order=args.max_order, seed=args.seed, random_count=args.random, trials=args.trials
        )
        _emit(report)
        for row in report["violations"]:
            print(f"violation: {row['family']} graph6={row['graph6']} {row['detail']}", file=sys.stderr)
        return EXIT_OK if report["ok"] else EXIT_VIOLATION

    if args.command == "oracle-check":
        if args.random <= 0 and args.no_families:
            raise GraphFormatError("empty oracle corpus")
        report = harness.oracle_check(random_count=args.random, seed=args.seed, include_families=not args.no_families)
        _emit(report)
        return EXIT_OK if report["passed"] else EXIT_VIOLATION

    if args.command == "generate":
        g = families.build(args.spec)
        if args.emit == "graph6":
            print(emit_graph6(g).decode())
        else:
            print(g.n)
            for u, v in g.edges():
                print(u, v)
        return EXIT_OK
    raise AssertionError(args.command)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
