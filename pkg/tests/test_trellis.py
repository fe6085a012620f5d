from __future__ import annotations

import random
from collections import deque

import numpy as np
import pytest
from hypothesis import given, strategies as st

from freedist.distances import INF, state_min_weights
from freedist.errors import NotRowReduced, StateSpaceTooLarge
from freedist.galois import GF2
from freedist.polymat import GeneratorMatrix, encode, reverse_code
from freedist.trellis import Trellis, m_vector, sigma

from conftest import codes


def test_small_code_edges(small_code):
    T = Trellis(small_code)
    edges = {}
    for s in range(T.num_states):
        for tr in T.forward_extensions(T.decode_state(s)):
            key = "".join(map(str, tr.source[0])) + "->" + "".join(map(str, tr.target[0]))
            edges[key] = "".join(map(str, tr.output))
    assert edges == {
        "00->00": "00", "00->10": "10",
        "10->01": "00", "10->11": "10",
        "01->00": "11", "01->10": "01",
        "11->01": "11", "11->11": "01",
    }


def test_m_vector_and_sigma():
    regs = ((1, 0, 0), (0, 1), ())
    assert m_vector(regs) == [2, 0, 0]
    assert sigma(regs) == 2
    assert sigma(((0, 0),)) == 0


def test_requires_row_reduced():
    G = GeneratorMatrix.from_lists(GF2, [[[0, 1], [0, 1], [1]], [[0, 1], [1, 1], [0]]])
    with pytest.raises(NotRowReduced):
        Trellis(G)


@given(codes())
def test_state_round_trip(G):
    T = Trellis(G)
    for s in range(min(T.num_states, 64)):
        assert T.encode_state(T.decode_state(s)) == s
        assert T.reverse_index(T.reverse_index(s)) == s
    assert T.decode_state(0) == tuple((0,) * v for v in T.nu)


@given(codes())
def test_fast_lists_match_definition(G):
    T = Trellis(G)
    for s in range(min(T.num_states, 64)):
        regs = T.decode_state(s)
        fwd = T.forward_extensions(regs)
        assert T.successors(s) == [(T.encode_state(t.target), t.weight) for t in fwd]
        for label, tr in enumerate(fwd):
            assert T.input_index(tr.inputs) == label
        bwd = T.backward_extensions(regs)
        assert all(t.target == regs for t in bwd)
        assert T.predecessors(s) == [(T.encode_state(t.source), t.weight) for t in bwd]


@given(codes())
def test_forward_backward_edge_sets_agree(G):
    T = Trellis(G)
    fwd = sorted((s, t, w) for s in range(T.num_states) for t, w in T.successors(s))
    bwd = sorted((p, s, w) for s in range(T.num_states) for p, w in T.predecessors(s))
    assert fwd == bwd
    assert T.predecessors(0)[0] == (0, 0)


@given(codes())
def test_sigma_is_bfs_distance(G):
    T = Trellis(G)
    dist = {0: 0}
    todo = deque([0])
    while todo:
        s = todo.popleft()
        for t, _ in T.successors(s):
            if t not in dist:
                dist[t] = dist[s] + 1
                todo.append(t)
    assert len(dist) == T.num_states
    assert all(T.sigma_of(s) == d for s, d in dist.items())


@given(codes(), st.integers(0, 2**32 - 1))
def test_output_is_linear(G, seed):
    T = Trellis(G)
    F = T.field
    rng = random.Random(seed)

    def rand_regs():
        return T.decode_state(rng.randrange(T.num_states))

    r1, r2 = rand_regs(), rand_regs()
    u1 = tuple(rng.randrange(T.q) for _ in range(T.k))
    u2 = tuple(rng.randrange(T.q) for _ in range(T.k))
    c = rng.randrange(T.q)
    radd = tuple(tuple(F.add(a, b) for a, b in zip(x, y)) for x, y in zip(r1, r2))
    uadd = tuple(F.add(a, b) for a, b in zip(u1, u2))
    lhs = T.output(radd, uadd)
    rhs = tuple(F.add(a, b) for a, b in zip(T.output(r1, u1), T.output(r2, u2)))
    assert lhs == rhs
    rs = tuple(tuple(F.mul(c, a) for a in x) for x in r1)
    us = tuple(F.mul(c, a) for a in u1)
    assert T.output(rs, us) == tuple(F.mul(c, a) for a in T.output(r1, u1))


@given(codes(), st.integers(0, 2**32 - 1))
def test_trellis_walk_matches_encoding(G, seed):
    T = Trellis(G)
    rng = random.Random(seed)
    L = rng.randint(1, 5)
    u = [[rng.randrange(T.q) for _ in range(L)] for _ in range(T.k)]
    v = encode([tuple(x) for x in u], G)
    regs = T.decode_state(0)
    for t in range(L + T.M):
        inp = tuple(u[i][t] if t < L else 0 for i in range(T.k))
        out = T.output(regs, inp)
        assert out == tuple(v[j][t] if t < len(v[j]) else 0 for j in range(T.n))
        regs = T.step(regs, inp)
    assert T.encode_state(regs) == 0


@given(codes())
def test_tables_match_lists(G):
    T = Trellis(G)
    tb = T.tables()
    for s in range(T.num_states):
        assert [(int(a), int(b)) for a, b in zip(tb.next[s], tb.weight[s])] == T.successors(s)


@given(codes(max_delta=3))
def test_reverse_code_indexes_suffixes(G):
    """d(S) of the reverse code at the reversed state = lightest short suffix S -> 0."""
    T = Trellis(G)
    R = Trellis(reverse_code(G))
    dR = state_min_weights(R.G, trellis=R).values
    cur = np.full(T.num_states, INF, dtype=np.int64)
    cur[0] = 0
    tb = T.tables()
    for _ in range(T.M + 1):
        cur = np.minimum(cur, (cur[tb.next] + tb.weight).min(axis=1))
    assert all(cur[s] == dR[T.reverse_index(s)] for s in range(T.num_states))


def test_table_limit(monkeypatch, heapmod_code):
    monkeypatch.setenv("FREEDIST_TABLE_LIMIT", "8")
    with pytest.raises(StateSpaceTooLarge):
        Trellis(heapmod_code).tables()
