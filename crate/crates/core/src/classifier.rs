//! Vertex classification.
//!
//! [`classify_vertex`] is the linear-time recognition algorithm: root the tree
//! at the query vertex, prune it, and read the answer off the class counts of
//! the root's child chains. [`classify_all`] repeats it for every vertex.
//!
//! The rest of the module is a three-state tree DP for the dissociation
//! number, with an optional membership constraint on one vertex. It shares no
//! code with the pruning path and serves as a scalable cross-check.

use rayon::prelude::*;

use crate::pruning::{prune, ChildClassCounts};
use crate::tree::{Tree, Vertex, VertexClass, VertexOutOfRange};

/// Class of the root of a pruned tree, given its children's chain classes.
pub fn class_from_root_counts(counts: &ChildClassCounts) -> VertexClass {
    if counts.forces_inclusion() {
        VertexClass::All
    } else if counts.forces_exclusion() {
        VertexClass::None
    } else {
        VertexClass::Some
    }
}

/// Decides whether `v` lies in all, some, or no maximum dissociation sets.
pub fn classify_vertex(tree: &Tree, v: Vertex) -> Result<VertexClass, VertexOutOfRange> {
    let rooted = tree.root_at(v)?;
    let pruned = prune(&rooted);
    let counts = pruned
        .child_classes(v)
        .expect("root children of a fully pruned tree are chains");
    Ok(class_from_root_counts(&counts))
}

/// Classifies every vertex, one independent run per vertex.
pub fn classify_all(tree: &Tree) -> Vec<VertexClass> {
    (0..tree.n())
        .map(|v| classify_vertex(tree, v).unwrap())
        .collect()
}

/// [`classify_all`] fanned out over the current rayon pool.
pub fn classify_all_parallel(tree: &Tree) -> Vec<VertexClass> {
    (0..tree.n())
        .into_par_iter()
        .map(|v| classify_vertex(tree, v).unwrap())
        .collect()
}

/// Best dissociation-set sizes inside the subtree of a vertex, split by the
/// vertex's own status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DpState {
    /// Vertex not in the set.
    pub out: usize,
    /// Vertex in the set, none of its children in the set.
    pub in_free: usize,
    /// Vertex in the set with exactly one child in the set. `None` for leaves.
    pub in_matched: Option<usize>,
}

impl DpState {
    pub fn best_in(&self) -> usize {
        self.in_matched
            .map_or(self.in_free, |m| m.max(self.in_free))
    }

    pub fn best(&self) -> usize {
        self.out.max(self.best_in())
    }
}

/// Membership constraint on a single vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    Free,
    ForceIn,
    ForceOut,
}

/// DP states of every vertex for the tree rooted at `root`.
///
/// Children are visited before parents by walking a depth-first preorder
/// (built with an explicit stack) backwards, so deep trees are fine.
pub fn dp_states(tree: &Tree, root: Vertex) -> Result<Vec<DpState>, VertexOutOfRange> {
    tree.check_vertex(root)?;
    let n = tree.n();
    let mut parent = vec![usize::MAX; n];
    let mut preorder = Vec::with_capacity(n);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(u) = stack.pop() {
        preorder.push(u);
        for &w in tree.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                stack.push(w);
            }
        }
    }

    let mut states = vec![
        DpState {
            out: 0,
            in_free: 1,
            in_matched: None
        };
        n
    ];
    for &u in preorder.iter().rev() {
        let mut out = 0;
        let mut in_free = 1;
        for &w in tree.neighbors(u) {
            if w != parent[u] {
                out += states[w].best();
                in_free += states[w].out;
            }
        }
        // Pair u with one child w: swap w's `out` contribution for `in_free`.
        let in_matched = tree
            .neighbors(u)
            .iter()
            .filter(|&&w| w != parent[u])
            .map(|&w| in_free - states[w].out + states[w].in_free)
            .max();
        states[u] = DpState {
            out,
            in_free,
            in_matched,
        };
    }
    Ok(states)
}

/// The dissociation number of `tree`.
pub fn dissociation_number(tree: &Tree) -> usize {
    dp_states(tree, 0).unwrap()[0].best()
}

/// Largest dissociation set subject to a membership constraint on `v`.
pub fn constrained_psi(
    tree: &Tree,
    v: Vertex,
    mode: Constraint,
) -> Result<usize, VertexOutOfRange> {
    let root = dp_states(tree, v)?[v];
    Ok(match mode {
        Constraint::Free => root.best(),
        Constraint::ForceIn => root.best_in(),
        Constraint::ForceOut => root.out,
    })
}

/// Classification of `v` by comparing constrained optima: forcing `v` in
/// loses size iff `v` is in no maximum set, forcing it out loses size iff `v`
/// is in all of them.
pub fn oracle_classify_via_dp(tree: &Tree, v: Vertex) -> Result<VertexClass, VertexOutOfRange> {
    let root = dp_states(tree, v)?[v];
    let psi = root.best();
    let in_deficit = root.best_in() < psi;
    let out_deficit = root.out < psi;
    assert!(
        !(in_deficit && out_deficit),
        "a maximum set either contains v or not"
    );
    Ok(if in_deficit {
        VertexClass::None
    } else if out_deficit {
        VertexClass::All
    } else {
        VertexClass::Some
    })
}
