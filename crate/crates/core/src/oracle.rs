//! Ground truth for small trees: exhaustive search over vertex subsets and
//! over all labeled trees of a given order.
//!
//! Nothing here calls into the pruning or DP code.

use thiserror::Error;

use crate::tree::{Tree, Vertex, VertexClass};

/// Largest tree order accepted by the exhaustive subset search.
pub const MAX_ENUMERATION_ORDER: usize = 24;
/// Largest order accepted by [`enumerate_labeled_trees`].
pub const MAX_LABELED_TREE_ORDER: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("tree on {n} vertices is too large for exhaustive search (max {max})")]
    TooLarge { n: usize, max: usize },
    #[error("labeled tree enumeration supports 1 <= n <= {max}, got {n}")]
    OutOfSupportedRange { n: usize, max: usize },
}

/// A vertex subset of a tree on at most 64 vertices, as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DissociationSet(u64);

impl DissociationSet {
    pub fn from_mask(mask: u64) -> Self {
        DissociationSet(mask)
    }

    pub fn from_members(members: &[Vertex]) -> Self {
        DissociationSet(members.iter().fold(0, |m, &v| m | 1 << v))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: Vertex) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn members(self) -> impl Iterator<Item = Vertex> {
        (0..64).filter(move |&v| self.0 >> v & 1 == 1)
    }

    /// The vertices of an `n`-vertex tree not in this set.
    pub fn complement(self, n: usize) -> DissociationSet {
        let all = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
        DissociationSet(all & !self.0)
    }
}

/// Whether every member of `set` has at most one neighbor inside `set`.
pub fn is_dissociation_set(tree: &Tree, set: &[Vertex]) -> bool {
    let mut member = vec![false; tree.n()];
    for &v in set {
        member[v] = true;
    }
    set.iter()
        .all(|&v| tree.neighbors(v).iter().filter(|&&w| member[w]).count() <= 1)
}

/// Whether `cover` meets every path on three vertices.
pub fn is_three_path_vertex_cover(tree: &Tree, cover: DissociationSet) -> bool {
    (0..tree.n()).all(|center| {
        let uncovered = tree
            .neighbors(center)
            .iter()
            .filter(|&&w| !cover.contains(w))
            .count();
        cover.contains(center) || uncovered < 2
    })
}

struct Search<'t> {
    tree: &'t Tree,
    // Induced degree of each chosen vertex among the chosen vertices so far.
    degree: Vec<u8>,
    mask: u64,
    best: usize,
    found: Vec<DissociationSet>,
}

impl Search<'_> {
    /// Decides vertices in label order. A vertex may join only if it and each
    /// already-chosen neighbor stay at induced degree ≤ 1; branches that
    /// cannot reach the best size seen are cut.
    fn run(&mut self, i: usize, size: usize) {
        let n = self.tree.n();
        if size + (n - i) < self.best {
            return;
        }
        if i == n {
            if size > self.best {
                self.best = size;
                self.found.clear();
            }
            self.found.push(DissociationSet(self.mask));
            return;
        }

        let tree = self.tree;
        let mut chosen = tree
            .neighbors(i)
            .iter()
            .copied()
            .filter(|&w| w < i && self.mask >> w & 1 == 1);
        let first = chosen.next();
        let admissible = chosen.next().is_none() && first.is_none_or(|w| self.degree[w] == 0);
        if admissible {
            self.mask |= 1 << i;
            self.degree[i] = u8::from(first.is_some());
            if let Some(w) = first {
                self.degree[w] += 1;
            }
            self.run(i + 1, size + 1);
            if let Some(w) = first {
                self.degree[w] -= 1;
            }
            self.degree[i] = 0;
            self.mask &= !(1 << i);
        }
        self.run(i + 1, size);
    }
}

/// Every maximum dissociation set of `tree`, in no particular order.
pub fn enumerate_max_diss_sets(tree: &Tree) -> Result<Vec<DissociationSet>, OracleError> {
    let n = tree.n();
    if n > MAX_ENUMERATION_ORDER {
        return Err(OracleError::TooLarge {
            n,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    let mut search = Search {
        tree,
        degree: vec![0; n],
        mask: 0,
        best: 0,
        found: Vec::new(),
    };
    search.run(0, 0);
    Ok(search.found)
}

/// Per-vertex class read directly off the family of maximum sets.
pub fn oracle_classify_all(tree: &Tree) -> Result<Vec<VertexClass>, OracleError> {
    let sets = enumerate_max_diss_sets(tree)?;
    let in_all = sets.iter().fold(u64::MAX, |acc, s| acc & s.mask());
    let in_any = sets.iter().fold(0, |acc, s| acc | s.mask());
    Ok((0..tree.n())
        .map(|v| {
            if in_all >> v & 1 == 1 {
                VertexClass::All
            } else if in_any >> v & 1 == 0 {
                VertexClass::None
            } else {
                VertexClass::Some
            }
        })
        .collect())
}

/// Iterator over all labeled trees on `n` vertices, by Prüfer sequence in
/// lexicographic order.
#[derive(Debug, Clone)]
pub struct LabeledTrees {
    n: usize,
    seq: Vec<Vertex>,
    done: bool,
}

impl Iterator for LabeledTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if self.done {
            return None;
        }
        let tree = Tree::from_prufer(self.n, &self.seq);
        // Odometer increment; wrapping past the last digit ends the stream.
        self.done = true;
        for digit in self.seq.iter_mut().rev() {
            *digit += 1;
            if *digit < self.n {
                self.done = false;
                break;
            }
            *digit = 0;
        }
        Some(tree)
    }
}

/// All `n^(n-2)` labeled trees on `n` vertices (one tree for `n` ≤ 2).
pub fn enumerate_labeled_trees(n: usize) -> Result<LabeledTrees, OracleError> {
    if !(1..=MAX_LABELED_TREE_ORDER).contains(&n) {
        return Err(OracleError::OutOfSupportedRange {
            n,
            max: MAX_LABELED_TREE_ORDER,
        });
    }
    Ok(LabeledTrees {
        n,
        seq: vec![0; n.saturating_sub(2)],
        done: false,
    })
}

/// Cayley's count `n^(n-2)` of labeled trees.
pub fn labeled_tree_count(n: usize) -> usize {
    if n <= 2 {
        1
    } else {
        n.pow(n as u32 - 2)
    }
}
