//! Recognition of vertices that lie in all, some, or no maximum dissociation
//! sets of a tree.
//!
//! A dissociation set is a vertex subset inducing maximum degree at most 1.
//! [`classify_vertex`] answers the membership question for one vertex in
//! linear time by pruning the tree rooted at that vertex down to a spider.
//! The [`classifier`] DP and the exhaustive [`oracle`] provide independent
//! answers for cross-checking.

pub mod bench;
pub mod classifier;
pub mod oracle;
pub mod path_rules;
pub mod pruning;
pub mod tree;
pub mod verify;

pub use classifier::{
    classify_all, classify_all_parallel, classify_vertex, constrained_psi, dissociation_number,
    oracle_classify_via_dp, Constraint,
};
pub use oracle::{
    enumerate_labeled_trees, enumerate_max_diss_sets, oracle_classify_all, DissociationSet,
};
pub use path_rules::{path_witness, psi_path, WitnessMode};
pub use pruning::{prune, psi_spider, ChildClassCounts, PrunedTree};
pub use tree::{
    parse_edge_list, random_tree, RootedTree, Tree, TreeError, Vertex, VertexClass,
    VertexOutOfRange,
};
