"""Naive, FAST and bidirectional searches against the oracle and each other."""

from __future__ import annotations

import heapq

import pytest
from hypothesis import given, settings

from freedist.bidir import BACKWARD, FORWARD, TypedNode, bidir_free_distance
from freedist.distances import INF, dijkstra_free_distance
from freedist.errors import BadBound, Catastrophic, NotRowReduced
from freedist.fast import FastOptions, fast_free_distance
from freedist.galois import GF2, Field
from freedist.naive import naive_free_distance, rebalance
from freedist.polymat import GeneratorMatrix
from freedist.trellis import Trellis

from conftest import codes

CATASTROPHIC = GeneratorMatrix.from_lists(GF2, [[[1, 1], [1, 1]]])
NOT_REDUCED = GeneratorMatrix.from_lists(GF2, [[[0, 1], [0, 1], [1]], [[0, 1], [1, 1], [0]]])
ENGINES = [
    naive_free_distance,
    lambda G, W0=None: fast_free_distance(G, FastOptions(True, W0)),
    lambda G, W0=None: fast_free_distance(G, FastOptions(False, W0)),
    bidir_free_distance,
]
IDS = ["naive", "fast", "fast-baseline", "bidir"]


def test_naive_trace_small_code(small_code):
    T = Trellis(small_code)
    trace = []
    d, stats = naive_free_distance(small_code, trace=trace)
    assert d == 3
    readable = [
        (ev[0], "".join(map(str, T.decode_state(ev[1])[0])), ev[2]) if ev[0] != "bound" else ev for ev in trace
    ]
    assert readable == [
        ("push", "01", 4),
        ("push", "11", 2),
        ("push", "10", 4),
        ("bound", 3),
        ("drop", "11", 2),
        ("push", "01", 0),
        ("push", "10", 0),
    ]
    assert stats.bound_updates == 1


def test_rebalance():
    assert rebalance([(1, 5, 0), (2, 2, 0), (3, 3, 1)], 3) == [(1, 2, 0), (3, 0, 1)]


@pytest.mark.parametrize("engine", ENGINES, ids=IDS)
def test_preconditions(engine):
    with pytest.raises(Catastrophic):
        engine(CATASTROPHIC)
    with pytest.raises(NotRowReduced):
        engine(NOT_REDUCED)


@pytest.mark.parametrize("engine", ENGINES, ids=IDS)
def test_bad_bound(engine, small_code):
    with pytest.raises(BadBound):
        engine(small_code, 0)


@pytest.mark.parametrize("engine", ENGINES, ids=IDS)
def test_examples(engine, small_code, heapmod_code):
    assert engine(small_code)[0] == 3
    assert engine(heapmod_code)[0] == 8
    # delta = 0: the only codewords are multiples of the constant row
    assert engine(GeneratorMatrix.from_lists(GF2, [[[1], [1]]]))[0] == 2


@pytest.mark.parametrize("engine", ENGINES, ids=IDS)
def test_tight_and_loose_bounds(engine, heapmod_code):
    assert engine(heapmod_code, 8)[0] == 8
    assert engine(heapmod_code, 100)[0] == 8
    # a bound below d_free is returned unchanged: nothing lighter exists
    assert engine(heapmod_code, 5)[0] == 5


@settings(max_examples=80)
@given(codes())
def test_engines_match_oracle(G):
    d = dijkstra_free_distance(G)
    for engine in ENGINES:
        assert engine(G)[0] == d


def forward_distances(T):
    """Lightest nonempty forward path zero -> s for every s."""
    dist = {}
    heap = [(w, t) for a, (t, w) in enumerate(T.successors(0)) if a]
    heapq.heapify(heap)
    while heap:
        d, s = heapq.heappop(heap)
        if s in dist:
            continue
        dist[s] = d
        for t, w in T.successors(s):
            if t not in dist:
                heapq.heappush(heap, (d + w, t))
    return dist


@given(codes())
def test_fast_discards_are_sound(G):
    """Every discarded node has budget below the lightest forward path reaching it."""
    T = Trellis(G)
    dist = forward_distances(T)
    W0 = 3 * dijkstra_free_distance(G) + 5
    for use in (True, False):
        discarded = []
        fast_free_distance(G, FastOptions(use, W0), discarded=discarded)
        for t, WE, reason in discarded:
            assert reason in ("column", "state") and (use or reason == "column")
            assert dist.get(t, INF) > WE


@given(codes())
def test_state_pruning_dominates(G):
    for W0 in (None, 2 * dijkstra_free_distance(G) + 3):
        opt = fast_free_distance(G, FastOptions(True, W0))[1]
        base = fast_free_distance(G, FastOptions(False, W0))[1]
        assert opt.extensions_evaluated <= base.extensions_evaluated


def test_fast_degrades_without_tables(monkeypatch, heapmod_code):
    full = fast_free_distance(heapmod_code, FastOptions(False))[1]
    monkeypatch.setenv("FREEDIST_TABLE_LIMIT", "8")
    d, stats = fast_free_distance(heapmod_code)
    assert (d, stats.degraded) == (8, True)
    assert stats.extensions_evaluated == full.extensions_evaluated


def test_half_bound_fails_at_exact_bound():
    # prefix weights 1, 3, 4: no split has both halves <= (4 + 2 - 1) / 2
    G = GeneratorMatrix.from_lists(Field(3), [[[0, 1], [2, 2, 1]]])
    T = Trellis(G)
    assert dijkstra_free_distance(G) == 4
    assert min_weight_codeword_paths(T, 4) == [[1, 3, 4], [1, 3, 4]]
    assert bidir_free_distance(G)[0] == 4


def test_typed_node():
    node = TypedNode(3, 5, FORWARD)
    assert node.type == "F"
    node.dead = True
    assert node.type == "DF"
    assert TypedNode(1, 0, BACKWARD, dead=True).type == "DB"


def min_weight_codeword_paths(T, d):
    """All zero -> ... -> zero trellis paths of weight d with at least two steps."""
    out = []

    def walk(s, path, w):
        for t, e in T.successors(s):
            nw = w + e
            if nw > d:
                continue
            if t == 0:
                if nw == d:
                    out.append(path + [nw])
                continue
            walk(t, path + [nw], nw)

    for a, (t, e) in enumerate(T.successors(0)):
        if a and t and e <= d:
            walk(t, [e], e)
    return out


@settings(max_examples=40)
@given(codes(max_delta=3))
def test_half_bound_split_exists(G):
    """Until a weight-d codeword is recorded W* >= d + 1, and at that bound
    every minimum codeword splits into halves that both pass the cutoff."""
    T = Trellis(G)
    d = dijkstra_free_distance(G, trellis=T)
    half = (d + 1 + T.n - 1) / 2
    for prefix in min_weight_codeword_paths(T, d):
        # prefix[i] is the accumulated weight after step i + 1; the last entry is d
        assert any(a <= half and d - a <= half for a in prefix[:-1])
