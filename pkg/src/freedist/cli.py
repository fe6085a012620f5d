"""Command line entry point: ``freedist {check,dfree,coldist,bench,larsen-graph}``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import bench
from .distances import column_distances
from .errors import FreeDistError, MalformedDiagram, MismatchedDistance, ParseError, PreconditionError
from .legacy import WeightedDigraph, larsen_on_graph, shortest_zero_cycle
from .polymat import code_profile, row_degrees

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_MISMATCH = 4
EXIT_PARTIAL = 5

ALGS = ("naive", "fast", "bidir", "larsen", "heapmod", "oracle")
HEAPMOD_BANNER = "WARNING: heapmod is KNOWN-INCORRECT; it ignores codewords longer than M + 2 steps"


def _flag(b: bool) -> str:
    return "true" if b else "false"


def cmd_check(args) -> int:
    cf = bench.load_code_file(args.file)
    p = code_profile(cf.G)
    print(
        f"n={p.n} k={p.k} δ={p.delta} M={p.M} row_reduced={_flag(p.row_reduced)} "
        f"noncatastrophic={_flag(p.noncatastrophic)} singleton={p.singleton}"
    )
    print(f"q={p.q} nu={list(p.nu)} internal_degree={p.delta} external_degree={p.external_degree}")
    if not p.noncatastrophic:
        print("warning: catastrophic generator; the dfree algorithms will refuse it", file=sys.stderr)
    if not p.row_reduced:
        print("warning: generator is not row reduced; the dfree algorithms will refuse it", file=sys.stderr)
    return EXIT_OK


def cmd_dfree(args) -> int:
    cf = bench.load_code_file(args.file)
    alg = args.alg
    if alg == "fast" and args.no_dstate_pruning:
        alg = "fast-baseline"
    if alg == "heapmod":
        print(HEAPMOD_BANNER, file=sys.stderr)
    d, st = bench.ENGINES[alg](cf.G, args.bound)
    print(f"dfree={d}")
    if args.stats:
        for key, value in st.as_dict().items():
            print(f"{key}={value}")
    else:
        print(f"extensions_evaluated={st.extensions_evaluated} peak_storage={st.peak_storage}")
    return EXIT_OK


def cmd_coldist(args) -> int:
    cf = bench.load_code_file(args.file)
    nu = row_degrees(cf.G)
    J = max(nu) if args.J is None else args.J
    prof = column_distances(cf.G, J)
    print("j,d_j")
    for j, d in enumerate(prof.values):
        print(f"{j},{d}")
    return EXIT_OK


def cmd_bench(args) -> int:
    algs = [a.strip() for a in args.algs.split(",") if a.strip()]
    unknown = [a for a in algs if a not in bench.ENGINES]
    if unknown:
        print(f"error: unknown algorithms {', '.join(unknown)}", file=sys.stderr)
        return EXIT_USAGE
    codes = bench.load_corpus(args.corpus)
    if not codes:
        print(f"error: no *.json files in {args.corpus}", file=sys.stderr)
        return EXIT_USAGE
    records, skipped = bench.run_bench(codes, algs, parallel=args.parallel)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            bench.write_csv(records, fh)
    else:
        bench.write_csv(records, sys.stdout)
    if skipped:
        for reason in skipped:
            print(f"skipped {reason}", file=sys.stderr)
        print(f"partial run: {len(skipped)} file(s) skipped", file=sys.stderr)
        return EXIT_PARTIAL
    return EXIT_OK


def cmd_larsen_graph(args) -> int:
    path = Path(args.graph)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise MalformedDiagram(f"{path}: top level must be an object")
    g = WeightedDigraph.from_dict(data)
    bound = args.bound if args.bound is not None else sum(w for _, _, w in g.edges)
    print(f"larsen={larsen_on_graph(g, bound, args.n)}")
    print(f"shortest_cycle={shortest_zero_cycle(g)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="freedist", description="Free distance of convolutional codes.")
    ap.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="structural report for a code file")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("dfree", help="compute the free distance")
    p.add_argument("file")
    p.add_argument("--alg", choices=ALGS, default="bidir")
    p.add_argument("--bound", type=int, default=None, help="initial upper bound W*")
    p.add_argument("--no-dstate-pruning", action="store_true", help="baseline FAST pruning only")
    p.add_argument("--stats", action="store_true", help="print every counter")
    p.set_defaults(func=cmd_dfree)

    p = sub.add_parser("coldist", help="column distance profile as CSV")
    p.add_argument("file")
    p.add_argument("--J", type=int, default=None, help="last index (default: memory M)")
    p.set_defaults(func=cmd_coldist)

    p = sub.add_parser("bench", help="run algorithms over a corpus directory")
    p.add_argument("corpus")
    p.add_argument("--algs", default="fast,fast-baseline,bidir")
    p.add_argument("--csv", default=None, help="output path (default: stdout)")
    p.add_argument("--parallel", type=int, default=1)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("larsen-graph", help="Larsen's search on an explicit state diagram")
    p.add_argument("--graph", required=True)
    p.add_argument("--bound", type=int, default=None, help="initial W* (default: total edge weight)")
    p.add_argument("--n", type=int, default=None, help="per-step weight bound (default: heaviest edge)")
    p.set_defaults(func=cmd_larsen_graph)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except MismatchedDistance as exc:
        print(f"MISMATCH: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FreeDistError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
