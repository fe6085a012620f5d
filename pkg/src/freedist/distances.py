"""Column distances, state distance tables and the Dijkstra free-distance oracle."""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from .polymat import GeneratorMatrix, require_distance_ready
from .trellis import Trellis

INF = np.iinfo(np.int64).max // 4


@dataclass(frozen=True)
class ColumnDistanceProfile:
    values: tuple[int, ...]

    def __getitem__(self, j: int) -> int:
        return self.values[j]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class StateDistanceTable:
    """``values[s]``: lightest path zero -> s with at most ``horizon`` steps."""

    values: np.ndarray
    horizon: int

    def __getitem__(self, s: int) -> int:
        return int(self.values[s])


def _relax(tables, dist: np.ndarray) -> np.ndarray:
    new = np.full_like(dist, INF)
    cand = dist[:, None] + tables.weight
    np.minimum.at(new, tables.next.ravel(), cand.ravel())
    return new


def column_distances(
    G: GeneratorMatrix, J: int, *, method: str = "dp", trellis: Trellis | None = None
) -> ColumnDistanceProfile:
    """d_0..d_J: lightest first j+1 output blocks over codewords with v_0 != 0.

    ``method="dp"`` relaxes the dense trellis tables layer by layer;
    ``method="dfs"`` enumerates input sequences depth first, pruning on the
    best weight found so far for each depth.  Both are exhaustive.
    """
    T = trellis or Trellis(G)
    if J < 0:
        raise ValueError("J must be >= 0")
    if method == "dfs":
        return ColumnDistanceProfile(tuple(_column_distances_dfs(T, J)))
    if method != "dp":
        raise ValueError(f"unknown method {method!r}")
    tb = T.tables()
    dist = np.full(T.num_states, INF, dtype=np.int64)
    first = tb.weight[0].astype(np.int64)
    nonzero = first > 0
    np.minimum.at(dist, tb.next[0][nonzero], first[nonzero])
    values = [int(dist.min())]
    for _ in range(J):
        dist = _relax(tb, dist)
        values.append(int(dist.min()))
    return ColumnDistanceProfile(tuple(values))


def _column_distances_dfs(T: Trellis, J: int) -> list[int]:
    best = [INF] * (J + 1)

    def walk(s: int, depth: int, w: int) -> None:
        # depth = index of the block just emitted
        if w < best[depth]:
            best[depth] = w
        if depth == J:
            return
        for t, e in T.successors(s):
            nw = w + e
            # weights only grow along a path: stop once no deeper minimum can improve
            if any(nw < b for b in best[depth + 1 :]):
                walk(t, depth + 1, nw)

    for t, w in T.successors(0):
        if w > 0:
            walk(t, 0, w)
    return best


def state_min_weights(G: GeneratorMatrix, *, trellis: Trellis | None = None) -> StateDistanceTable:
    """d(S) over forward zero -> S paths of length at most M + 1."""
    T = trellis or Trellis(G)
    tb = T.tables()
    dist = np.full(T.num_states, INF, dtype=np.int64)
    dist[0] = 0
    for _ in range(T.M + 1):
        # the zero self-loop keeps shorter paths alive
        dist = _relax(tb, dist)
    return StateDistanceTable(dist, T.M + 1)


def dijkstra_free_distance(G: GeneratorMatrix, *, trellis: Trellis | None = None) -> int:
    """Lightest nontrivial zero -> zero cycle of the trellis."""
    require_distance_ready(G)
    T = trellis or Trellis(G)
    tb = T.tables()
    nxt = tb.next.tolist()
    wt = tb.weight.tolist()
    best = INF
    # nonzero-input self-loops at the zero state are codewords of length one
    for a in range(1, T.num_inputs):
        if nxt[0][a] == 0:
            best = min(best, wt[0][a])
    dist: dict[int, int] = {}
    heap = []
    for a in range(1, T.num_inputs):
        t = nxt[0][a]
        if t and wt[0][a] < dist.get(t, INF):
            dist[t] = wt[0][a]
            heapq.heappush(heap, (wt[0][a], t))
    done = set()
    while heap:
        d, s = heapq.heappop(heap)
        if s in done or d > dist[s]:
            continue
        if d >= best:
            break
        done.add(s)
        for t, w in zip(nxt[s], wt[s]):
            nd = d + w
            if t == 0:
                best = min(best, nd)
            elif nd < dist.get(t, INF):
                dist[t] = nd
                heapq.heappush(heap, (nd, t))
    return int(best)


def depth_limited_min_weight(G: GeneratorMatrix, L: int, *, trellis: Trellis | None = None) -> int:
    """Lightest codeword u*G with u != 0 and every row of u of degree < L."""
    if L < 1:
        raise ValueError("L must be >= 1")
    T = trellis or Trellis(G)
    tb = T.tables()
    # weight of flushing each state to zero with zero inputs
    flush = np.zeros(T.num_states, dtype=np.int64)
    s = np.arange(T.num_states)
    for _ in range(T.M):
        flush += tb.weight[s, 0]
        s = tb.next[s, 0]
    # a shift of u by z keeps the weight, so take u(0) != 0
    dist = np.full(T.num_states, INF, dtype=np.int64)
    first = tb.weight[0].astype(np.int64)
    np.minimum.at(dist, tb.next[0][1:], first[1:])
    best = int((dist + flush).min())
    for _ in range(L - 1):
        dist = _relax(tb, dist)
        best = min(best, int((dist + flush).min()))
    return best
