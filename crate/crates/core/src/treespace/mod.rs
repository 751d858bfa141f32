//! Ultrametrics, equidistant trees, and their identification with the
//! Bergman fan of the complete graph.

mod dissimilarity;
mod membership;
mod spanning;
mod topology;
mod tree;

pub use dissimilarity::{
    delta_to_weights, is_ultrametric, pair_at, pair_count, pair_index, ultrametric_witness,
    weights_to_delta, DissimilarityMap, EdgeWeighting,
};
pub use membership::{
    membership_cycle, membership_mst, membership_triangle, CYCLE_ENUMERATION_MAX_N,
};
pub use spanning::{
    all_min_spanning_trees, all_spanning_trees, is_spanning_tree, min_spanning_trees_bruteforce,
    min_spanning_trees_reverse_delete, BRUTE_FORCE_MAX_N, TREE_BUDGET,
};
pub use topology::{
    ranked_topology, topology_from_min_bases, unranked_topology, RankedTopology, UnrankedTopology,
};
pub use tree::{tree_to_ultrametric, ultrametric_to_tree, EquidistantTree, Node};
