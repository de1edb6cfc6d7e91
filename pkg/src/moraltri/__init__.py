"""Moral graphs, elimination kits, and triangulation by elimination ordering.

The package covers three layers:

* graph core: undirected graphs, DAGs, elimination, chordality, cliques;
* morality: moralization, perfect elimination kits, the moral-graph test;
* triangulation and reductions: exact min fill-in / treewidth / total-states
  solvers, and the bipartite gadget constructions that tie those problems
  to linear arrangement, cut width, and degree-sequence objectives, with
  brute-force oracles and verification campaigns to back every formula.
"""

from .graphs import (
    ContractViolation,
    Dag,
    EliminationKit,
    GraphError,
    ResourceLimitError,
    UndirectedGraph,
    check_ordering,
    deficiency,
    eliminate,
    find_peo,
    is_chordal,
    is_simplicial,
    maximal_cliques,
    neighborhood_edges,
)
from .morality import chordal_kit, find_pek, is_moral, moralize, verify_pek
from .triangulation import (
    CliqueTree,
    MinFill,
    TotalStates,
    Treewidth,
    greedy_min_fill,
    junction_tree,
    min_fill_exact,
    total_states,
    total_states_exact,
    treewidth_exact,
    triangulate_by_ordering,
    validate_tree_decomposition,
    width_of_ordering,
)
from .reductions import (
    BipartiteGadget,
    bipartite,
    build_eds_gadget,
    build_mcla_gadget,
    build_ola_gadget,
    chain_fill_set,
    eval_ki_delta,
    eval_lambda,
    eval_omega,
    eval_saturation,
    is_chain,
    linear_cut_value,
    ola_cost,
    partition_completion,
    pi_p_from_alpha,
    saturated_vertices,
    witness_kit,
)
from .oracles import (
    brute_is_moral,
    brute_min_fill_orderings,
    brute_min_mcla,
    brute_min_ola,
    eds_feasible,
)

__version__ = "0.1.0"

__all__ = [
    "BipartiteGadget", "CliqueTree", "ContractViolation", "Dag",
    "EliminationKit", "GraphError", "MinFill", "ResourceLimitError",
    "TotalStates", "Treewidth", "UndirectedGraph", "bipartite",
    "brute_is_moral", "brute_min_fill_orderings", "brute_min_mcla",
    "brute_min_ola", "build_eds_gadget", "build_mcla_gadget",
    "build_ola_gadget", "chain_fill_set", "check_ordering", "chordal_kit",
    "deficiency", "eds_feasible", "eliminate", "eval_ki_delta",
    "eval_lambda", "eval_omega", "eval_saturation", "find_peo", "find_pek",
    "greedy_min_fill", "is_chain", "is_chordal", "is_moral",
    "is_simplicial", "junction_tree", "linear_cut_value",
    "maximal_cliques", "min_fill_exact", "moralize", "neighborhood_edges",
    "ola_cost", "partition_completion", "pi_p_from_alpha",
    "saturated_vertices", "total_states", "total_states_exact",
    "treewidth_exact", "triangulate_by_ordering",
    "validate_tree_decomposition", "verify_pek", "width_of_ordering",
    "witness_kit",
]
