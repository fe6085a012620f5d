"""Older binary rate-1/n algorithms, reproduced as published.

``heapmod_free_distance`` is KNOWN-INCORRECT: it only looks at inputs of
length at most M + 2.  ``larsen_on_graph`` runs Larsen's bidirectional
search on any diagram with the shift structure of a binary memory-m
encoder; it is not a shortest-cycle algorithm for arbitrary edge weights.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .distances import INF, _relax
from .errors import MalformedDiagram, UnsupportedRate
from .polymat import GeneratorMatrix, require_distance_ready, singleton_bound
from .stats import RunStats
from .trellis import Trellis

Edge = tuple[str, str, int]


def _require_binary_rate_1n(G: GeneratorMatrix, name: str) -> None:
    if G.k != 1 or G.field.q != 2:
        raise UnsupportedRate(f"{name} needs a binary rate 1/n code, got k={G.k}, q={G.field.q}")


# --- Heapmod ------------------------------------------------------------------


def heapmod_indices(M: int) -> list[int]:
    """l_j = (2j + 1) * 2^M for j < 2^(M+1): tree nodes that return to zero."""
    return [(2 * j + 1) << M for j in range(1 << (M + 1))]


def heapmod_free_distance(G: GeneratorMatrix, *, full_table: bool = False) -> int:
    """Minimum over the Heapmod root paths. KNOWN-INCORRECT for long codewords.

    Tree node ``i`` (root 1, children 2i and 2i+1) holds register
    ``i mod 2^(M+1)``; bit d of the register is the input d steps ago.
    """
    _require_binary_rate_1n(G, "heapmod")
    M = max(len(e) for e in G.rows[0]) - 1
    if M < 0:
        raise UnsupportedRate("zero generator")
    R = 1 << (M + 1)
    gens = G.rows[0]

    def out_weight(reg: int) -> int:
        w = 0
        for g in gens:
            bit = 0
            for d, c in enumerate(g):
                if c and (reg >> d) & 1:
                    bit ^= 1
            w += bit
        return w

    weights: dict[int, int] = {}
    if full_table:
        weights = {r: out_weight(r) for r in range(1, R)}
    best = INF
    for leaf in heapmod_indices(M):
        total, i = 0, leaf
        while i >= 1:
            r = i % R
            if r not in weights:
                weights[r] = out_weight(r)
            total += weights[r]
            i >>= 1
        best = min(best, total)
    return int(best)


# --- weighted digraphs ----------------------------------------------------------


@dataclass(frozen=True)
class WeightedDigraph:
    vertices: tuple[str, ...]
    zero: str
    edges: tuple[Edge, ...]

    @classmethod
    def from_dict(cls, d: dict) -> "WeightedDigraph":
        try:
            edges = tuple((str(a), str(b), int(w)) for a, b, w in d["edges"])
            return cls(tuple(str(v) for v in d["vertices"]), str(d["zero"]), edges)
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedDiagram(f"bad graph description: {exc}") from exc

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "zero": self.zero, "edges": [list(e) for e in self.edges]}

    def shift_structure(self) -> tuple[dict, dict]:
        """Per vertex, the 0/1 successor and 0/1 predecessor with edge weights.

        Labels are bit strings, most recent bit first: input b moves ``v``
        to ``b + v[:-1]``.
        """
        m = len(self.zero)
        if m == 0 or set(self.zero) != {"0"}:
            raise MalformedDiagram("zero vertex must be a nonempty all-zero bit string")
        verts = set(self.vertices)
        if len(verts) != 1 << m or any(len(v) != m or set(v) - {"0", "1"} for v in verts):
            raise MalformedDiagram(f"vertices must be all {1 << m} bit strings of length {m}")
        weight: dict[tuple[str, str], int] = {}
        for a, b, w in self.edges:
            if a not in verts or b not in verts:
                raise MalformedDiagram(f"edge {a}->{b} uses an unknown vertex")
            if w < 0:
                raise MalformedDiagram(f"edge {a}->{b} has negative weight")
            if (a, b) in weight:
                raise MalformedDiagram(f"duplicate edge {a}->{b}")
            weight[(a, b)] = w
        succ: dict[str, list[tuple[str, int]]] = {}
        pred: dict[str, list[tuple[str, int]]] = {v: [None, None] for v in verts}
        for v in verts:
            succ[v] = []
            for bit in "01":
                t = bit + v[:-1]
                if (v, t) not in weight:
                    raise MalformedDiagram(f"missing shift edge {v}->{t}")
                succ[v].append((t, weight[(v, t)]))
                pred[t][int(v[-1])] = (v, weight[(v, t)])
        if len(weight) != 2 * len(verts):
            raise MalformedDiagram("graph has edges outside the shift structure")
        return succ, pred


def shortest_zero_cycle(g: WeightedDigraph) -> int:
    """Lightest zero -> zero cycle other than the zero-input self-loop (Dijkstra)."""
    succ, _ = g.shift_structure()
    dist = {}
    heap = []
    t, w = succ[g.zero][1]
    if t == g.zero:
        return w
    dist[t] = w
    heap.append((w, t))
    best = INF
    while heap:
        d, s = heapq.heappop(heap)
        if d > dist[s] or d >= best:
            continue
        for t, w in succ[s]:
            if t == g.zero:
                best = min(best, d + w)
            elif d + w < dist.get(t, INF):
                dist[t] = d + w
                heapq.heappush(heap, (d + w, t))
    return int(best)


# --- Larsen -------------------------------------------------------------------


def _larsen(
    succ: Callable[[str, int], tuple[str, int]],
    pred: Callable[[str, int], tuple[str, int]],
    zero: str,
    f_seed: str,
    b_seed: str,
    W0: int,
    n: int,
) -> tuple[int, RunStats]:
    stats = RunStats()
    Wstar = W0
    # entry: [W_L, T2, dead, seq]
    array: dict[str, list] = {}
    heap: list = []
    seq = 0

    def store(s: str, w: int, t2: str) -> None:
        nonlocal seq
        array[s] = [w, t2, False, seq]
        heapq.heappush(heap, (w, seq, s))
        seq += 1
        stats.stored(len(array))

    wf = succ(zero, 1)[1]
    wb = pred(zero, 1)[1]
    stats.extensions_evaluated += 2
    store(f_seed, wf, "F")
    if b_seed == f_seed:
        # memory 1: both seeds are the same state
        Wstar = min(Wstar, wf + wb)
        if wb < wf:
            array[f_seed][0] = wb
            array[f_seed][1] = "B"
            heapq.heappush(heap, (wb, array[f_seed][3], f_seed))
    else:
        store(b_seed, wb, "B")

    while True:
        # lightest live entry; stale heap items are skipped
        while heap:
            WL, _, S = heap[0]
            entry = array[S]
            if entry[2] or entry[0] != WL:
                heapq.heappop(heap)
                continue
            break
        else:
            break
        T2 = entry[1]
        if 2 * WL >= Wstar:
            break
        for E in (0, 1):
            t, w = succ(S, E) if T2 == "F" else pred(S, E)
            stats.extensions_evaluated += 1
            WEL = WL + w
            if 2 * WEL > Wstar + n - 1:
                continue
            other = array.get(t)
            if other is None:
                store(t, WEL, T2)
                continue
            if other[1] != T2:
                if WEL + other[0] < Wstar:
                    Wstar = WEL + other[0]
                    stats.bound_updates += 1
                if WEL >= other[0]:
                    continue
                other[0] = WEL
                other[1] = T2
                if not other[2]:
                    heapq.heappush(heap, (WEL, other[3], t))
                continue
            if other[2]:
                continue
            if WEL < other[0]:
                other[0] = WEL
                heapq.heappush(heap, (WEL, other[3], t))
        entry[2] = True
    return Wstar, stats


def larsen_on_graph(g: WeightedDigraph, W0: int, n: int | None = None) -> int:
    """Larsen's algorithm on explicit edge weights.

    ``n`` enters the half-bound cutoff; it defaults to the heaviest edge,
    the per-step weight bound that n plays for a real code.
    """
    return _larsen_graph_stats(g, W0, n)[0]


def _larsen_graph_stats(g: WeightedDigraph, W0: int, n: int | None = None) -> tuple[int, RunStats]:
    succ, pred = g.shift_structure()
    if n is None:
        n = max(w for _, _, w in g.edges)
    m = len(g.zero)
    f_seed = "1" + "0" * (m - 1)
    b_seed = "0" * (m - 1) + "1"
    return _larsen(lambda s, e: succ[s][e], lambda s, e: pred[s][e], g.zero, f_seed, b_seed, W0, n)


def code_digraph(G: GeneratorMatrix) -> WeightedDigraph:
    """State diagram of a binary rate-1/n code with output weights on the edges."""
    _require_binary_rate_1n(G, "code_digraph")
    T = Trellis(G)

    def label(s: int) -> str:
        return "".join(str(c) for c in T.decode_state(s)[0])

    verts = tuple(label(s) for s in range(T.num_states))
    edges = tuple((label(s), label(t), w) for s in range(T.num_states) for t, w in T.successors(s))
    return WeightedDigraph(verts, label(0), edges)


def larsen_free_distance(G: GeneratorMatrix, W0: int | None = None) -> int:
    return larsen_with_stats(G, W0)[0]


def larsen_with_stats(G: GeneratorMatrix, W0: int | None = None) -> tuple[int, RunStats]:
    _require_binary_rate_1n(G, "larsen")
    nu = require_distance_ready(G)
    if W0 is None:
        W0 = singleton_bound(G.n, 1, nu[0])
    if nu[0] == 0:
        # single state: the only codewords are multiples of the constant row
        return min(W0, sum(1 for e in G.rows[0] if e)), RunStats(extensions_evaluated=1)
    return _larsen_graph_stats(code_digraph(G), W0, G.n)


# --- green/blue path property ------------------------------------------------


def green_blue_property(G: GeneratorMatrix, horizon: int | None = None) -> bool:
    """Every path zero -> (0..011) -> (0..01) weighs at least the edge (0..01) -> zero."""
    _require_binary_rate_1n(G, "green_blue_property")
    T = Trellis(G)
    M = T.M
    if M < 2:
        raise ValueError("green/blue property needs memory M >= 2")
    horizon = 2 * M + 2 if horizon is None else horizon
    X = ((0,) * (M - 2) + (1, 1),)
    Y = ((0,) * (M - 1) + (1,),)
    sx, sy = T.encode_state(X), T.encode_state(Y)
    t, green_edge = T.successors(sx)[0]
    assert t == sy
    blue = T.successors(sy)[0][1]

    tb = T.tables()
    dist = np.full(T.num_states, INF, dtype=np.int64)
    dist[0] = 0
    for _ in range(horizon - 1):
        dist = _relax(tb, dist)
    return int(dist[sx]) + green_edge >= blue
