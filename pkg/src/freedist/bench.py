"""Engine registry, code-file loading and corpus benchmarking."""

from __future__ import annotations

import csv
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields
from pathlib import Path
from typing import Callable, Iterable, TextIO

from .bidir import bidir_free_distance
from .distances import dijkstra_free_distance
from .errors import MismatchedDistance, ParseError, PreconditionError, UnsupportedRate
from .fast import FastOptions, fast_free_distance
from .legacy import heapmod_free_distance, larsen_with_stats
from .naive import naive_free_distance
from .polymat import GeneratorMatrix, code_from_dict, internal_degree, require_distance_ready
from .stats import RunStats

log = logging.getLogger(__name__)

Engine = Callable[[GeneratorMatrix, "int | None"], "tuple[int, RunStats]"]

ENGINES: dict[str, Engine] = {
    "naive": lambda G, W: naive_free_distance(G, W),
    "fast": lambda G, W: fast_free_distance(G, FastOptions(True, W)),
    "fast-baseline": lambda G, W: fast_free_distance(G, FastOptions(False, W)),
    "bidir": lambda G, W: bidir_free_distance(G, W),
    "larsen": lambda G, W: larsen_with_stats(G, W),
    "heapmod": lambda G, W: (heapmod_free_distance(G), RunStats()),
    "oracle": lambda G, W: (dijkstra_free_distance(G), RunStats()),
}
# heapmod is reproduced with its flaw and never cross-checked
CORRECT = frozenset(ENGINES) - {"heapmod"}

CSV_HEADER = ("id", "n", "k", "delta", "q", "dfree", "alg", "ext_eval", "nodes_stored", "peak", "ns")


@dataclass(frozen=True)
class CodeFile:
    path: Path
    G: GeneratorMatrix
    id: str


def load_code_file(path: str | Path) -> CodeFile:
    path = Path(path)
    text = path.read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise ParseError(f"{path}: top level must be an object")
    try:
        G = code_from_dict(data)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    return CodeFile(path, G, str(data.get("id", path.stem)))


def load_corpus(directory: str | Path) -> list[CodeFile]:
    return [load_code_file(p) for p in sorted(Path(directory).glob("*.json"))]


@dataclass(frozen=True)
class BenchRecord:
    id: str
    n: int
    k: int
    delta: int
    q: int
    dfree: int
    alg: str
    ext_eval: int
    nodes_stored: int
    peak: int
    ns: int


def _bench_one(code_id: str, G: GeneratorMatrix, algs: tuple[str, ...]) -> tuple[list[BenchRecord], str | None]:
    try:
        require_distance_ready(G)
    except PreconditionError as exc:
        return [], f"{code_id}: {exc}"
    delta = internal_degree(G)
    truth = dijkstra_free_distance(G)
    out = []
    for alg in algs:
        t0 = time.perf_counter_ns()
        try:
            d, st = ENGINES[alg](G, None)
        except UnsupportedRate:
            log.info("%s: %s does not apply, skipped", code_id, alg)
            continue
        ns = time.perf_counter_ns() - t0
        if alg in CORRECT and d != truth:
            raise MismatchedDistance(f"{code_id}: {alg} returned {d}, oracle says {truth}")
        out.append(
            BenchRecord(code_id, G.n, G.k, delta, G.field.q, d, alg,
                        st.extensions_evaluated, st.nodes_stored, st.peak_storage, ns)
        )
    return out, None


def run_bench(
    codes: Iterable[CodeFile], algs: Iterable[str], *, parallel: int = 1
) -> tuple[list[BenchRecord], list[str]]:
    """Run every (code, algorithm) pair; return records and skip reasons.

    Raises MismatchedDistance as soon as a correct engine disagrees with the
    oracle.  Records come back in corpus order regardless of ``parallel``.
    """
    algs = tuple(algs)
    unknown = [a for a in algs if a not in ENGINES]
    if unknown:
        raise ValueError(f"unknown algorithms: {', '.join(unknown)}")
    codes = list(codes)
    if parallel > 1:
        with ProcessPoolExecutor(parallel) as pool:
            results = list(pool.map(_bench_one, [c.id for c in codes], [c.G for c in codes], [algs] * len(codes)))
    else:
        results = [_bench_one(c.id, c.G, algs) for c in codes]
    records, skipped = [], []
    for recs, reason in results:
        records.extend(recs)
        if reason:
            log.info("skipped %s", reason)
            skipped.append(reason)
    return records, skipped


def write_csv(records: Iterable[BenchRecord], out: TextIO) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        w.writerow(astuple(r))


def read_csv(src: TextIO) -> list[BenchRecord]:
    rows = list(csv.DictReader(src))
    types = {f.name: f.type for f in fields(BenchRecord)}
    return [BenchRecord(**{k: (v if types[k] in ("str", str) else int(v)) for k, v in row.items()}) for row in rows]
