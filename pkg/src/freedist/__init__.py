"""Free distance of convolutional codes over finite fields."""

from .bidir import bidir_free_distance
from .distances import column_distances, depth_limited_min_weight, dijkstra_free_distance, state_min_weights
from .fast import FastOptions, fast_free_distance
from .galois import GF2, Field
from .legacy import (
    WeightedDigraph,
    green_blue_property,
    heapmod_free_distance,
    larsen_free_distance,
    larsen_on_graph,
    shortest_zero_cycle,
)
from .naive import naive_free_distance
from .polymat import GeneratorMatrix, code_profile, encode, reverse_code, singleton_bound
from .stats import RunStats
from .trellis import Trellis

__version__ = "0.1.0"

__all__ = [
    "Field",
    "GF2",
    "GeneratorMatrix",
    "Trellis",
    "RunStats",
    "FastOptions",
    "WeightedDigraph",
    "bidir_free_distance",
    "code_profile",
    "column_distances",
    "depth_limited_min_weight",
    "dijkstra_free_distance",
    "encode",
    "fast_free_distance",
    "green_blue_property",
    "heapmod_free_distance",
    "larsen_free_distance",
    "larsen_on_graph",
    "naive_free_distance",
    "reverse_code",
    "shortest_zero_cycle",
    "singleton_bound",
    "state_min_weights",
]
