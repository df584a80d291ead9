//! The pruning process on a rooted tree.
//!
//! Working bottom-up from the deepest branch vertex, every non-root vertex
//! with two or more children is rewritten so that it either disappears with
//! its whole subtree or keeps a single child chain. The fixpoint is the
//! pruning of the tree: every surviving non-root vertex has degree at most 2,
//! so the root's child subtrees are paths.
//!
//! Deleted vertices are only marked. Each vertex is deleted at most once and
//! chain orders are carried upward incrementally, so the whole process is
//! linear in the size of the tree.

use thiserror::Error;

use crate::path_rules::psi_path;
use crate::tree::{RootedTree, Tree, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum PruneError {
    #[error("vertex {vertex} is not a surviving vertex")]
    NotSurviving { vertex: Vertex },
    #[error("vertex {vertex} is the root")]
    IsRoot { vertex: Vertex },
    #[error("vertex {vertex} has fewer than two surviving children")]
    NotABranchVertex { vertex: Vertex },
    #[error("vertex {vertex} has a descendant {at} of degree greater than 2")]
    DescendantDegreeViolation { vertex: Vertex, at: Vertex },
    #[error("subtree of child {child} is not a path (vertex {at} branches)")]
    ChildNotPath { child: Vertex, at: Vertex },
    #[error("vertex {vertex} is a non-root vertex of degree greater than 2")]
    NotASpider { vertex: Vertex },
}

/// How many children of a vertex head a chain of order ≡ 0, 1, 2 (mod 3).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ChildClassCounts {
    pub c0: usize,
    pub c1: usize,
    pub c2: usize,
    /// The single child in class 1, when there is exactly one.
    pub c1_member: Option<Vertex>,
}

impl ChildClassCounts {
    /// Tallies child chain orders.
    pub fn from_orders(children: impl IntoIterator<Item = (Vertex, usize)>) -> Self {
        let mut counts = ChildClassCounts::default();
        for (w, order) in children {
            counts.add(w, order);
        }
        counts
    }

    /// Counts child `w` heading a chain of the given order.
    pub fn add(&mut self, w: Vertex, order: usize) {
        match order % 3 {
            0 => self.c0 += 1,
            1 => {
                self.c1 += 1;
                self.c1_member = if self.c1 == 1 { Some(w) } else { None };
            }
            _ => self.c2 += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.c0 + self.c1 + self.c2
    }

    /// The vertex is in every maximum dissociation set of its spider.
    pub fn forces_inclusion(&self) -> bool {
        self.c2 == 0 && self.c1 <= 1
    }

    /// The vertex is in no maximum dissociation set of its spider.
    pub fn forces_exclusion(&self) -> bool {
        self.c2 == 2 || self.c1 + self.c2 >= 3
    }
}

/// What a single pruning step did.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PruneAction {
    /// The vertex and all of its descendants were deleted.
    DeletedSubtree { removed: usize },
    /// Every child subtree except the one headed by `kept` was deleted.
    KeptChild { kept: Vertex, removed: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PruneStep {
    pub vertex: Vertex,
    pub counts: ChildClassCounts,
    pub action: PruneAction,
}

/// Surviving vertices of a rooted tree under pruning, plus the orders of the
/// chains hanging below vertices whose subtree is already a path.
///
/// The public interface speaks vertex labels. Internally every per-vertex
/// array is indexed by breadth-first position, where each vertex's children
/// are contiguous and descendants come after ancestors.
#[derive(Debug, Clone)]
pub struct PrunedTree<'r, 'a> {
    rooted: &'r RootedTree<'a>,
    alive: Vec<bool>,
    live_children: Vec<usize>,
    // 0 = not yet known
    pathlen: Vec<usize>,
    steps: Vec<PruneStep>,
    stack: Vec<usize>,
}

impl<'r, 'a> PrunedTree<'r, 'a> {
    /// The initial state: nothing deleted.
    pub fn new(rooted: &'r RootedTree<'a>) -> Self {
        let n = rooted.n();
        PrunedTree {
            rooted,
            alive: vec![true; n],
            live_children: (0..n).map(|p| rooted.child_positions(p).len()).collect(),
            pathlen: vec![0; n],
            steps: Vec::new(),
            stack: Vec::new(),
        }
    }

    pub fn rooted(&self) -> &'r RootedTree<'a> {
        self.rooted
    }

    pub fn root(&self) -> Vertex {
        self.rooted.root()
    }

    fn pos(&self, v: Vertex) -> usize {
        self.rooted.position(v)
    }

    fn label(&self, p: usize) -> Vertex {
        self.rooted.bfs_order()[p]
    }

    pub fn is_alive(&self, v: Vertex) -> bool {
        v < self.alive.len() && self.alive[self.pos(v)]
    }

    /// Surviving vertices, ascending by label.
    pub fn surviving(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.alive.len()).filter(move |&v| self.alive[self.pos(v)])
    }

    pub fn surviving_count(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    fn children_at(&self, p: usize) -> impl Iterator<Item = usize> + '_ {
        self.rooted
            .child_positions(p)
            .filter(move |&c| self.alive[c])
    }

    /// Surviving children of `v`, ascending by label.
    pub fn children(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.children_at(self.pos(v)).map(move |c| self.label(c))
    }

    /// Degree of a surviving vertex in the surviving tree.
    pub fn degree(&self, v: Vertex) -> usize {
        self.live_children[self.pos(v)] + usize::from(v != self.root())
    }

    /// Order of the path hanging from `v`, if already recorded.
    pub fn pathlen(&self, v: Vertex) -> Option<usize> {
        match self.pathlen[self.pos(v)] {
            0 => None,
            len => Some(len),
        }
    }

    /// The pruning steps applied so far, in order.
    pub fn steps(&self) -> &[PruneStep] {
        &self.steps
    }

    /// Order of the subtree below position `p`, which must be a path
    /// starting there.
    fn chain_order_at(&self, p: usize) -> Result<usize, PruneError> {
        let mut len = 0;
        let mut x = p;
        loop {
            if self.pathlen[x] != 0 {
                return Ok(len + self.pathlen[x]);
            }
            len += 1;
            match self.live_children[x] {
                0 => return Ok(len),
                1 => x = self.children_at(x).next().unwrap(),
                _ => {
                    return Err(PruneError::ChildNotPath {
                        child: self.label(p),
                        at: self.label(x),
                    })
                }
            }
        }
    }

    fn child_classes_at(&self, p: usize) -> Result<ChildClassCounts, PruneError> {
        let mut counts = ChildClassCounts::default();
        for c in self.children_at(p) {
            counts.add(self.label(c), self.chain_order_at(c)?);
        }
        Ok(counts)
    }

    /// Classifies the surviving children of `u` by chain order mod 3.
    pub fn child_classes(&self, u: Vertex) -> Result<ChildClassCounts, PruneError> {
        if !self.is_alive(u) {
            return Err(PruneError::NotSurviving { vertex: u });
        }
        self.child_classes_at(self.pos(u))
    }

    /// Prunes at `u`, a surviving non-root vertex with at least two
    /// surviving children whose subtrees are all paths.
    ///
    /// If some child chain has order ≡ 2, or two have order ≡ 1, `u` and its
    /// descendants are deleted. Otherwise all child subtrees but one are
    /// deleted: the class-1 child if there is one, else the smallest label.
    pub fn prune_step(&mut self, u: Vertex) -> Result<PruneAction, PruneError> {
        if !self.is_alive(u) {
            return Err(PruneError::NotSurviving { vertex: u });
        }
        if u == self.root() {
            return Err(PruneError::IsRoot { vertex: u });
        }
        let p = self.pos(u);
        if self.live_children[p] < 2 {
            return Err(PruneError::NotABranchVertex { vertex: u });
        }
        self.prune_step_at(p)
    }

    fn prune_step_at(&mut self, p: usize) -> Result<PruneAction, PruneError> {
        let u = self.label(p);
        let counts = self.child_classes_at(p).map_err(|e| match e {
            PruneError::ChildNotPath { at, .. } => {
                PruneError::DescendantDegreeViolation { vertex: u, at }
            }
            other => other,
        })?;

        let action = if counts.c2 >= 1 || counts.c1 >= 2 {
            let removed = self.delete_subtree_at(p);
            PruneAction::DeletedSubtree { removed }
        } else {
            // Child runs are ascending by label, so the first survivor is the
            // smallest label.
            let kept_pos = match counts.c1_member {
                Some(z) => self.pos(z),
                None => self.children_at(p).next().unwrap(),
            };
            let mut removed = 0;
            for c in self.rooted.child_positions(p) {
                if c != kept_pos && self.alive[c] {
                    removed += self.delete_subtree_at(c);
                }
            }
            let order = self
                .chain_order_at(kept_pos)
                .expect("checked by child_classes");
            self.pathlen[kept_pos] = order;
            self.pathlen[p] = order + 1;
            PruneAction::KeptChild {
                kept: self.label(kept_pos),
                removed,
            }
        };
        self.steps.push(PruneStep {
            vertex: u,
            counts,
            action,
        });
        Ok(action)
    }

    /// Deletes position `p` and all of its surviving descendants; returns
    /// how many.
    fn delete_subtree_at(&mut self, p: usize) -> usize {
        if let Some(parent) = self.rooted.parent(self.label(p)) {
            let pp = self.pos(parent);
            self.live_children[pp] -= 1;
        }
        let rooted = self.rooted;
        let mut removed = 0;
        let mut stack = std::mem::take(&mut self.stack);
        stack.push(p);
        while let Some(x) = stack.pop() {
            self.alive[x] = false;
            self.live_children[x] = 0;
            self.pathlen[x] = 0;
            removed += 1;
            stack.extend(rooted.child_positions(x).filter(|&c| self.alive[c]));
        }
        self.stack = stack;
        removed
    }

    /// Copies the surviving tree out, relabeling survivors `0..k` in
    /// ascending order of their original labels.
    pub fn materialize(&self) -> MaterializedPruning {
        let mut index = vec![usize::MAX; self.alive.len()];
        let original: Vec<Vertex> = self.surviving().collect();
        for (i, &v) in original.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<(Vertex, Vertex)> = original
            .iter()
            .filter_map(|&v| self.rooted.parent(v).map(|p| (index[p], index[v])))
            .collect();
        let tree = Tree::from_edges(original.len(), &edges)
            .expect("surviving vertices are closed under taking parents");
        MaterializedPruning {
            tree,
            root: index[self.root()],
            original,
        }
    }
}

/// A pruned tree as a standalone [`Tree`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaterializedPruning {
    pub tree: Tree,
    /// The root's label in `tree`.
    pub root: Vertex,
    /// `original[i]` is the label in the input tree of vertex `i` of `tree`.
    pub original: Vec<Vertex>,
}

/// Runs the full pruning process on `rooted`.
///
/// Non-root vertices are visited deepest first. A vertex with two or more
/// surviving children when its turn comes is pruned; any other vertex just
/// extends the chain below it. Deletions only touch subtrees that were
/// already visited, so one pass suffices.
///
/// Vertices of equal depth have disjoint subtrees, so the order among them
/// does not affect the outcome; they are taken in reverse breadth-first
/// order, which keeps the pass sequential in memory.
pub fn prune<'r, 'a>(rooted: &'r RootedTree<'a>) -> PrunedTree<'r, 'a> {
    let mut state = PrunedTree::new(rooted);
    for p in (1..rooted.n()).rev() {
        debug_assert!(state.alive[p]);
        match state.live_children[p] {
            0 => state.pathlen[p] = 1,
            1 => {
                let c = state.children_at(p).next().unwrap();
                state.pathlen[p] = state.pathlen[c] + 1;
            }
            _ => {
                state
                    .prune_step_at(p)
                    .expect("descendants are chains when visited deepest first");
            }
        }
    }
    state
}

/// Dissociation number of a spider, a rooted tree whose non-root vertices
/// all have degree at most 2.
pub fn psi_spider(rooted: &RootedTree<'_>) -> Result<usize, PruneError> {
    let root = rooted.root();
    let mut orders = Vec::with_capacity(rooted.children(root).len());
    for &w in rooted.children(root) {
        let mut len = 1;
        let mut x = w;
        loop {
            match rooted.children(x) {
                [] => break,
                [next] => {
                    x = *next;
                    len += 1;
                }
                _ => return Err(PruneError::NotASpider { vertex: x }),
            }
        }
        orders.push((w, len));
    }
    let legs: usize = orders.iter().map(|&(_, len)| psi_path(len)).sum();
    let counts = ChildClassCounts::from_orders(orders);
    Ok(legs + usize::from(counts.forces_inclusion()))
}
