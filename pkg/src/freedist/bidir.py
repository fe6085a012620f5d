"""Bidirectional free-distance search over one shared state array.

Forward (F) nodes are prefixes grown from the zero state along the trellis
of ``G``; backward (B) nodes are suffixes grown from the zero state along
predecessor edges of the same trellis.  An F node and a B node on the same
state therefore join into a codeword.  ``W_L`` is the weight accumulated
from the zero state; ``W = W* - W_L`` is the residual budget.

Pruning uses FAST-style lower bounds on the missing half of the codeword:
for B nodes the missing part is a forward prefix of ``G`` (statistics of
``G``), for F nodes it is a suffix, i.e. a prefix of the reverse code read
at the register-reversed state.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .distances import column_distances, state_min_weights
from .naive import initial_bound
from .polymat import GeneratorMatrix, require_distance_ready, reverse_code
from .stats import RunStats
from .trellis import Trellis

FORWARD, BACKWARD = "F", "B"


@dataclass
class TypedNode:
    state: int
    weight: int  # W_L
    direction: str  # T2
    dead: bool = False  # T1 == D
    seq: int = 0

    @property
    def type(self) -> str:
        return ("D" if self.dead else "") + self.direction


class _Side:
    """Pruning statistics for one direction."""

    def __init__(self, T: Trellis, Tstat: Trellis, reverse: bool):
        self.T = T
        self.Tstat = Tstat
        self.reverse = reverse
        self.col = column_distances(Tstat.G, Tstat.M, trellis=Tstat).values
        self.dS = state_min_weights(Tstat.G, trellis=Tstat).values.tolist()
        self.dM = self.col[Tstat.M]

    def lower_bounds(self, s: int) -> tuple[int, int]:
        """(d(S, T), d_{sigma-1}(T)) at trellis state s."""
        idx = self.T.reverse_index(s) if self.reverse else s
        sig = self.Tstat.sigma_of(idx)
        return self.dS[idx], (self.col[sig - 1] if sig else 0)


def bidir_free_distance(
    G: GeneratorMatrix,
    W0: int | None = None,
    *,
    _store_zero_state: bool = False,
) -> tuple[int, RunStats]:
    """Return (free distance, stats).

    ``_store_zero_state`` replaces the zero-state return with ordinary
    storage; it exists only to show that this breaks the search for k > 1.
    """
    require_distance_ready(G)
    T = Trellis(G)
    Tbar = Trellis(reverse_code(G))
    sides = {BACKWARD: _Side(T, T, reverse=False), FORWARD: _Side(T, Tbar, reverse=True)}
    n = G.n
    stats = RunStats()
    Wstar = initial_bound(G, T, W0)

    array: dict[int, TypedNode] = {}
    heap: list[tuple[int, int, int]] = []
    alive = 0
    seq = 0

    def store(s: int, w: int, direction: str) -> None:
        nonlocal seq, alive
        node = TypedNode(s, w, direction, seq=seq)
        seq += 1
        array[s] = node
        alive += 1
        heapq.heappush(heap, (w, node.seq, s))
        stats.stored(len(array))

    def lower(node: TypedNode, w: int) -> None:
        node.weight = w
        heapq.heappush(heap, (w, node.seq, node.state))

    # seed both directions from the zero state
    fwd, bwd = T.successors(0), T.predecessors(0)
    stats.extensions_evaluated += len(fwd) + len(bwd)
    seeds: dict[str, dict[int, int]] = {FORWARD: {}, BACKWARD: {}}
    for direction, ends in ((FORWARD, fwd), (BACKWARD, bwd)):
        for label, (s, w) in enumerate(ends):
            if label == 0:
                continue
            if s == 0:
                if w < Wstar:
                    Wstar = w
                    stats.bound_updates += 1
                continue
            got = seeds[direction]
            if w < got.get(s, w + 1):
                got[s] = w
    for s, w in seeds[FORWARD].items():
        store(s, w, FORWARD)
    for s, w in seeds[BACKWARD].items():
        node = array.get(s)
        if node is None:
            store(s, w, BACKWARD)
            continue
        if node.weight + w < Wstar:
            Wstar = node.weight + w
            stats.bound_updates += 1
        if w < node.weight:
            node.direction = BACKWARD
            lower(node, w)

    done = alive == 0
    while not done:
        # lightest live node, earliest inserted on ties
        while True:
            WL, _, S = heapq.heappop(heap)
            node = array[S]
            if not node.dead and node.weight == WL:
                break
        T2 = node.direction
        side = sides[T2]
        ends = T.successors(S) if T2 == FORWARD else T.predecessors(S)
        stats.extensions_evaluated += len(ends)
        for t, w in ends:
            WEL = WL + w
            # zero-state returns only tighten the bound
            if t == 0 and not _store_zero_state:
                if WEL < Wstar:
                    Wstar = WEL
                    stats.bound_updates += 1
                continue
            # half-bound cutoff on the accumulated weight, FAST bounds on the residual
            if 2 * WEL > Wstar + n - 1:
                continue
            WE = Wstar - WEL
            d_state, d_sigma = side.lower_bounds(t)
            if (WE < d_state and WE < side.dM) or WE < d_sigma:
                continue
            other = array.get(t)
            if other is None:
                store(t, WEL, T2)
                continue
            if other.direction != T2:
                # opposite directions meet: a full codeword
                if WEL + other.weight < Wstar:
                    Wstar = WEL + other.weight
                    stats.bound_updates += 1
                if WEL >= other.weight:
                    continue
                # retype; a dead node stays dead
                other.direction = T2
                if other.dead:
                    other.weight = WEL
                else:
                    lower(other, WEL)
                continue
            if other.dead:
                continue
            if WEL < other.weight:
                lower(other, WEL)
        node.dead = True
        alive -= 1
        done = 2 * WL >= Wstar or alive == 0
    return Wstar, stats
