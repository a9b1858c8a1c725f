"""Exact prunings and distances for upset-decomposable multi-parameter persistence modules."""
from .ci import Pattern, ci_solvable, interleaving_distance_bruteforce, patterns
from .distances import (
    DEFAULT_TOL,
    DistanceResult,
    bottleneck_bruteforce,
    bottleneck_distance,
    inf_refinement,
    pair_interleaving,
    pruning_distance,
    refinement_all_delta,
)
from .modules import Module, iso_check, module_shift, random_module, sharpness_pair, supdim
from .pruning import ShiftGraph, build_graph, graph_distance, prune, prune_iterative
from .upsets import (
    DimensionMismatch,
    EmptyGenerators,
    Upset,
    antichain_reduce,
    intersect,
    member,
    minshift,
    shift_upset,
    subseteq,
    upset,
    upset_equal,
)

__version__ = "0.1.0"
