"""Backward stack search with a shrinking weight budget.

Nodes carry the residual budget ``W = W* - (weight spent so far)``.  When a
backward extension returns to the zero state with ``W_E > 0`` a codeword of
weight ``W* - W_E`` has been found: the bound, the current budget and every
stored budget drop by ``W_E`` and nodes that would go negative are deleted.
"""

from __future__ import annotations

from .errors import BadBound
from .polymat import GeneratorMatrix, require_distance_ready, singleton_bound
from .stats import RunStats
from .trellis import Trellis


def initial_bound(G: GeneratorMatrix, T: Trellis, W0: int | None) -> int:
    W = singleton_bound(G.n, G.k, T.delta) if W0 is None else W0
    if W < 1:
        raise BadBound(f"initial bound must be >= 1, got {W}")
    return W


def rebalance(nodes: list, drop: int) -> list:
    """Drop entries with budget below ``drop`` and lower the rest by it."""
    return [(s, w - drop, *rest) for s, w, *rest in nodes if w >= drop]


def naive_free_distance(
    G: GeneratorMatrix, W0: int | None = None, *, trace: list | None = None
) -> tuple[int, RunStats]:
    require_distance_ready(G)
    T = Trellis(G)
    Wstar = initial_bound(G, T, W0)
    stats = RunStats()
    log = trace.append if trace is not None else (lambda ev: None)

    start = T.predecessors(0)
    stats.extensions_evaluated += len(start)
    for e, (s, w) in enumerate(start):
        if e and s == 0 and w < Wstar:
            Wstar = w
            stats.bound_updates += 1
            log(("bound", Wstar))
    stack: list[tuple[int, int, int]] = []
    # zero label pushed last so it is popped first
    for s, w in reversed(start):
        if s and Wstar - w >= 0:
            stack.append((s, Wstar - w, 1))
            stats.stored(len(stack))
            log(("push", s, Wstar - w))

    while stack:
        S, W, depth = stack.pop()
        stats.max_depth = max(stats.max_depth, depth)
        ends = T.predecessors(S)
        stats.extensions_evaluated += len(ends)
        pending: list[tuple[int, int, int]] = []
        for t, w in ends:
            WE = W - w
            if t == 0:
                if WE > 0:
                    Wstar -= WE
                    W -= WE
                    stats.bound_updates += 1
                    log(("bound", Wstar))
                    for s2, w2, _ in stack + pending:
                        if w2 < WE:
                            log(("drop", s2, w2))
                    stack = rebalance(stack, WE)
                    pending = rebalance(pending, WE)
                continue
            if WE >= 0:
                pending.append((t, WE, depth + 1))
        for node in reversed(pending):
            stack.append(node)
            stats.stored(len(stack))
            log(("push", node[0], node[1]))
    return Wstar, stats
