"""condcolor: exact conditional (k,r)-coloring solver and verification harness."""

from .coloring import ColoringMap, Partition, Verdict, verify
from .graph import (
    FamilySpec,
    Graph,
    GraphError,
    cartesian_product,
    complete,
    complete_bipartite,
    complete_kary_tree,
    cycle,
    gear,
    join,
    line_graph,
    path,
    prop2_chain,
    random_tree,
    wheel,
)
from .solver import (
    SolveResult,
    SolverTimeout,
    UniquenessResult,
    chi_r,
    enumerate_partitions,
    feasible,
    is_uniquely_colorable,
    lower_bound,
)

__version__ = "0.1.0"

__all__ = [
    "ColoringMap",
    "FamilySpec",
    "Graph",
    "GraphError",
    "Partition",
    "SolveResult",
    "SolverTimeout",
    "UniquenessResult",
    "Verdict",
    "cartesian_product",
    "chi_r",
    "complete",
    "complete_bipartite",
    "complete_kary_tree",
    "cycle",
    "enumerate_partitions",
    "feasible",
    "gear",
    "is_uniquely_colorable",
    "join",
    "line_graph",
    "lower_bound",
    "path",
    "prop2_chain",
    "random_tree",
    "verify",
    "wheel",
]
