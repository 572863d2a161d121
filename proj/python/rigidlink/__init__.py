"""Combinatorial rigidity in the plane.

Graph-level rank and rigidity queries via the (2,3)-pebble game, global
rigidity testing, classification of vertex pairs as weakly globally linked
or globally loose, and an exact finite-field rank oracle for verification.
"""

from rigidlink._core import (
    Graph,
    GraphParseError,
    PreconditionError,
    audit_minimally_globally_rigid,
    augmented_graph,
    biconnected_components,
    classify_all_pairs,
    classify_pair,
    cleave,
    clique_graph,
    clique_sum,
    components,
    con_graph,
    contract_edge,
    contract_set,
    equivalence_sampler,
    fundamental_circuit,
    generic_rank,
    induced_subgraph,
    is_globally_rigid2,
    is_k_connected,
    is_linked2,
    is_redundantly_rigid2,
    is_rigid2,
    kappa_pair,
    kappa_pair_with_cut,
    loads,
    maximal_rigid_subgraphs,
    neighbors_of_set,
    r2_bridges,
    r2_components,
    rank2,
    rigidity_matrix,
    sufficient_condition_wgl,
    three_block,
    two_separators,
    weakly_linked_pairs,
)

__all__ = [
    "Graph",
    "GraphParseError",
    "PreconditionError",
    "audit_minimally_globally_rigid",
    "augmented_graph",
    "biconnected_components",
    "classify_all_pairs",
    "classify_pair",
    "cleave",
    "clique_graph",
    "clique_sum",
    "components",
    "con_graph",
    "contract_edge",
    "contract_set",
    "equivalence_sampler",
    "fundamental_circuit",
    "generic_rank",
    "induced_subgraph",
    "is_globally_rigid2",
    "is_k_connected",
    "is_linked2",
    "is_redundantly_rigid2",
    "is_rigid2",
    "kappa_pair",
    "kappa_pair_with_cut",
    "loads",
    "maximal_rigid_subgraphs",
    "neighbors_of_set",
    "r2_bridges",
    "r2_components",
    "rank2",
    "rigidity_matrix",
    "sufficient_condition_wgl",
    "three_block",
    "two_separators",
    "weakly_linked_pairs",
]

__version__ = "0.1.0"
