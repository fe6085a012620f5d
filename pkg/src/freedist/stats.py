from __future__ import annotations

from dataclasses import asdict, dataclass


@dataclass
class RunStats:
    """Work counters of one search run."""

    extensions_evaluated: int = 0
    nodes_stored: int = 0
    peak_storage: int = 0
    bound_updates: int = 0
    max_depth: int = 0
    # True when d(S) pruning was requested but the state table did not fit
    degraded: bool = False

    def stored(self, size: int) -> None:
        self.nodes_stored += 1
        if size > self.peak_storage:
            self.peak_storage = size

    def as_dict(self) -> dict:
        return asdict(self)
