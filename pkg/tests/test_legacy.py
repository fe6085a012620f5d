from __future__ import annotations

import json
import random

import pytest
from hypothesis import given

from freedist.codegen import random_code
from freedist.distances import dijkstra_free_distance
from freedist.errors import MalformedDiagram, UnsupportedRate
from freedist.galois import GF2, Field
from freedist.legacy import (
    WeightedDigraph,
    code_digraph,
    green_blue_property,
    heapmod_free_distance,
    heapmod_indices,
    larsen_free_distance,
    larsen_on_graph,
    larsen_with_stats,
    shortest_zero_cycle,
)
from freedist.polymat import GeneratorMatrix

from conftest import DATA, codes


@pytest.fixture
def trap():
    return WeightedDigraph.from_dict(json.loads((DATA / "larsen_trap_graph.json").read_text()))


def test_heapmod_indices():
    assert heapmod_indices(1) == [2, 6, 10, 14]


def test_heapmod_counterexample(heapmod_code):
    assert heapmod_free_distance(heapmod_code) == 9
    assert heapmod_free_distance(heapmod_code, full_table=True) == 9
    assert dijkstra_free_distance(heapmod_code) == 8


def test_heapmod_never_below_truth():
    rng = random.Random(4)
    for _ in range(30):
        G = random_code(rng, 2, rng.randint(2, 3), 1, rng.randint(1, 5))
        assert heapmod_free_distance(G) >= dijkstra_free_distance(G)


def test_larsen_trap_graph(trap):
    assert larsen_on_graph(trap, 100) == 13
    assert shortest_zero_cycle(trap) == 12
    assert trap.to_dict()["zero"] == "00"


def test_larsen_examples(small_code, heapmod_code):
    assert larsen_free_distance(small_code) == 3
    assert larsen_free_distance(heapmod_code) == 8
    assert larsen_free_distance(GeneratorMatrix.from_lists(GF2, [[[1], [1], [0]]])) == 2


@given(codes(qs=(2,), k=1, max_delta=6))
def test_larsen_matches_oracle(G):
    assert larsen_free_distance(G) == dijkstra_free_distance(G)
    d, stats = larsen_with_stats(G)
    assert stats.extensions_evaluated > 0


@given(codes(qs=(2,), k=1, max_delta=5))
def test_code_digraph_cycle_is_dfree(G):
    if G.n and max(len(e) for e in G.rows[0]) > 1:
        assert shortest_zero_cycle(code_digraph(G)) == dijkstra_free_distance(G)


def test_unsupported_rate():
    G = GeneratorMatrix.from_lists(Field(3), [[[1, 1], [1]]])
    with pytest.raises(UnsupportedRate):
        larsen_free_distance(G)
    with pytest.raises(UnsupportedRate):
        heapmod_free_distance(G)
    G2 = GeneratorMatrix.from_lists(GF2, [[[1], [0], [1]], [[0], [1], [1]]])
    with pytest.raises(UnsupportedRate):
        larsen_free_distance(G2)


@pytest.mark.parametrize(
    "bad",
    [
        {"vertices": ["0", "1"], "zero": "0", "edges": [["0", "0", 0], ["0", "1", 1], ["1", "0", 1]]},
        {"vertices": ["0", "1"], "zero": "0", "edges": [["0", "0", 0], ["0", "1", -1], ["1", "0", 1], ["1", "1", 1]]},
        {"vertices": ["0", "2"], "zero": "0", "edges": []},
        {"vertices": ["0", "1"], "zero": "1", "edges": []},
        {"vertices": ["0", "1"], "edges": []},
    ],
)
def test_malformed_diagrams(bad):
    with pytest.raises(MalformedDiagram):
        WeightedDigraph.from_dict(bad).shift_structure()


def test_green_blue(small_code, heapmod_code):
    assert green_blue_property(small_code)
    assert green_blue_property(heapmod_code)
