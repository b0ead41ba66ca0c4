"""Amalgamation classes of finite graphs, with brute-force verification.

The library builds and tests graph amalgamation classes: strong-embedding
predicates, minimal and biminimal pairs, free and full amalgams, closure
fixpoints, derived companions, finite-stage generics, and finite
certificates around structures with unbounded closures.  Everything is
checked against exhaustive definitional oracles at small sizes.
"""

from .graphs import (
    INF,
    Embedding,
    FiniteGraph,
    VertexSet,
    cycle_graph,
    complete_graph,
    distance_matrix,
    embedding,
    enumerate_simple_paths,
    extensions_over,
    graph,
    induced,
    longest_path_len_between,
    longest_path_order,
    ordered_graph,
    path_graph,
    vset,
)
from .kernel import (
    AmalgamationError,
    AmalgamVerdict,
    AxiomReport,
    BudgetExceededError,
    ClassSpec,
    Cmp,
    MinimalPair,
    PairKind,
    PreconditionError,
    check_axioms,
    check_free_amalgamation,
    check_full_amalgamation,
    enumerate_biminimal_extensions,
    free_amalgam,
    free_amalgam_parts,
    is_strong_bruteforce,
    is_strong_by_biminimal,
)
from .zoo import AlphaParam, ExactZeroError, class_names, get_class, kalpha_dn_obstruction

__version__ = "0.1.0"

__all__ = [
    "AlphaParam",
    "AmalgamVerdict",
    "AmalgamationError",
    "AxiomReport",
    "BudgetExceededError",
    "ClassSpec",
    "Cmp",
    "Embedding",
    "ExactZeroError",
    "FiniteGraph",
    "INF",
    "MinimalPair",
    "PairKind",
    "PreconditionError",
    "VertexSet",
    "check_axioms",
    "check_free_amalgamation",
    "check_full_amalgamation",
    "class_names",
    "complete_graph",
    "cycle_graph",
    "distance_matrix",
    "embedding",
    "enumerate_biminimal_extensions",
    "enumerate_simple_paths",
    "extensions_over",
    "free_amalgam",
    "free_amalgam_parts",
    "get_class",
    "graph",
    "induced",
    "is_strong_bruteforce",
    "is_strong_by_biminimal",
    "kalpha_dn_obstruction",
    "longest_path_len_between",
    "longest_path_order",
    "ordered_graph",
    "path_graph",
    "vset",
]
