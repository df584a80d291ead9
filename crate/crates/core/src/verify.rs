//! Cross-checks of the recognition algorithm against the DP and exhaustive
//! oracles.

use crate::classifier::{classify_vertex, oracle_classify_via_dp};
use crate::oracle::{oracle_classify_all, OracleError};
use crate::tree::{Tree, Vertex, VertexClass};

/// A vertex on which the three classifications disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mismatch {
    pub vertex: Vertex,
    pub pruning: VertexClass,
    pub dp: VertexClass,
    pub exhaustive: VertexClass,
}

/// Compares all three classifiers on every vertex of a small tree.
pub fn three_way(tree: &Tree) -> Result<Vec<Mismatch>, OracleError> {
    let exhaustive = oracle_classify_all(tree)?;
    Ok((0..tree.n())
        .filter_map(|v| {
            let pruning = classify_vertex(tree, v).unwrap();
            let dp = oracle_classify_via_dp(tree, v).unwrap();
            (pruning != dp || dp != exhaustive[v]).then_some(Mismatch {
                vertex: v,
                pruning,
                dp,
                exhaustive: exhaustive[v],
            })
        })
        .collect())
}

/// Compares the recognition algorithm with the DP oracle on chosen vertices
/// of a tree of any size. Returns `(vertex, pruning, dp)` for disagreements.
pub fn against_dp(tree: &Tree, vertices: &[Vertex]) -> Vec<(Vertex, VertexClass, VertexClass)> {
    vertices
        .iter()
        .filter_map(|&v| {
            let pruning = classify_vertex(tree, v).unwrap();
            let dp = oracle_classify_via_dp(tree, v).unwrap();
            (pruning != dp).then_some((v, pruning, dp))
        })
        .collect()
}
