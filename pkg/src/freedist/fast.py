"""Optimized FAST search, with a switch back to the baseline FAST pruning.

The backward search of :mod:`freedist.naive`, plus discards based on lower
bounds for the unexplored part of the codeword.  At a backward node ``S_E``
with budget ``W_E`` that remainder is a forward path zero -> S_E, so

* it needs at least ``sigma(S_E)`` steps, hence weighs at least
  ``d_{sigma-1}`` (baseline FAST);
* it weighs at least ``min(d(S_E), d_M)``: paths of at most M+1 steps are
  covered by the state table, longer ones by the M-th column distance.
"""

from __future__ import annotations

from dataclasses import dataclass

from .distances import column_distances, state_min_weights
from .errors import StateSpaceTooLarge
from .naive import initial_bound, rebalance
from .polymat import GeneratorMatrix, require_distance_ready
from .stats import RunStats
from .trellis import Trellis


@dataclass(frozen=True)
class FastOptions:
    use_state_distance_pruning: bool = True
    initial_bound: int | None = None


def fast_free_distance(
    G: GeneratorMatrix,
    opts: FastOptions | None = None,
    *,
    discarded: list | None = None,
) -> tuple[int, RunStats]:
    """Return (free distance, stats).

    ``discarded`` (optional list) receives ``(state, W_E, reason)`` for every
    extension thrown away by a lower-bound test.
    """
    opts = opts or FastOptions()
    require_distance_ready(G)
    T = Trellis(G)
    stats = RunStats()
    Wstar = initial_bound(G, T, opts.initial_bound)
    try:
        col = column_distances(G, T.M, trellis=T).values
    except StateSpaceTooLarge:
        col = column_distances(G, T.M, method="dfs", trellis=T).values
    dM = col[T.M]
    dS = None
    if opts.use_state_distance_pruning:
        try:
            dS = state_min_weights(G, trellis=T).values.tolist()
        except StateSpaceTooLarge:
            stats.degraded = True
    note = discarded.append if discarded is not None else (lambda ev: None)

    start = T.predecessors(0)
    stats.extensions_evaluated += len(start)
    for e, (s, w) in enumerate(start):
        if e and s == 0 and w < Wstar:
            Wstar = w
            stats.bound_updates += 1
    stack: list[tuple[int, int, int]] = []
    for s, w in reversed(start):
        if s and Wstar - w >= 0:
            stack.append((s, Wstar - w, 1))
            stats.stored(len(stack))

    current = None
    while True:
        if current is None:
            if not stack:
                break
            current = stack.pop()
        S, W, depth = current
        stats.max_depth = max(stats.max_depth, depth)
        ends = T.predecessors(S)
        stats.extensions_evaluated += len(ends)
        pending: list[tuple[int, int, int, int]] = []
        for label, (t, w) in enumerate(ends):
            WE = W - w
            if t == 0:
                if WE > 0:
                    Wstar -= WE
                    W -= WE
                    stats.bound_updates += 1
                    stack = rebalance(stack, WE)
                    pending = rebalance(pending, WE)
                continue
            if WE < 0:
                continue
            sig = T.sigma_of(t)
            # sig >= 1 here: only the zero state has sigma 0
            if WE < col[sig - 1]:
                note((t, WE, "column"))
                continue
            if dS is not None and WE < dS[t] and WE < dM:
                note((t, WE, "state"))
                continue
            pending.append((t, WE, depth + 1, label))
        if not pending:
            current = None
            continue
        # zero label first, then the cheapest extension, then label order
        pending.sort(key=lambda x: (x[3] != 0, -x[1], x[3]))
        current = pending[0][:3]
        for t, WE, d, _ in reversed(pending[1:]):
            stack.append((t, WE, d))
            stats.stored(len(stack))
    return Wstar, stats
