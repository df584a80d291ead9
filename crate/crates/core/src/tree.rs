//! Undirected labeled trees, the edge-list text format, rooting, and random
//! generation.
//!
//! Vertices are dense labels `0..n`. Adjacency is stored in compressed
//! sparse row form with every neighbor list sorted ascending, so any walk
//! that visits neighbors in storage order is deterministic.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub type Vertex = usize;

/// Errors raised while building a [`Tree`] from an edge list.
///
/// `line` is the 1-based line of the offending input. When the tree is built
/// from an edge slice instead of text, it is the 1-based index of the edge.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("line {line}: malformed line {text:?}")]
    MalformedLine { line: usize, text: String },
    #[error("line {line}: label {label} out of range for a tree on {n} vertices")]
    LabelOutOfRange { line: usize, label: u64, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: Vertex },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: Vertex, v: Vertex },
    #[error("line {line}: edge {u}-{v} closes a cycle")]
    CycleDetected { line: usize, u: Vertex, v: Vertex },
    #[error("line {line}: graph is disconnected ({components} components)")]
    Disconnected { line: usize, components: usize },
    #[error("line {line}: input contains no vertices")]
    Empty { line: usize },
}

impl TreeError {
    pub fn line(&self) -> usize {
        match *self {
            TreeError::MalformedLine { line, .. }
            | TreeError::LabelOutOfRange { line, .. }
            | TreeError::SelfLoop { line, .. }
            | TreeError::DuplicateEdge { line, .. }
            | TreeError::CycleDetected { line, .. }
            | TreeError::Disconnected { line, .. }
            | TreeError::Empty { line } => line,
        }
    }
}

/// A vertex label that does not belong to the tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("vertex {vertex} out of range for a tree on {n} vertices")]
pub struct VertexOutOfRange {
    pub vertex: Vertex,
    pub n: usize,
}

/// Three-way membership of a vertex with respect to the maximum
/// dissociation sets of a tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexClass {
    /// In every maximum dissociation set.
    All,
    /// In some but not all maximum dissociation sets.
    Some,
    /// In no maximum dissociation set.
    None,
}

impl VertexClass {
    pub fn as_str(self) -> &'static str {
        match self {
            VertexClass::All => "ALL",
            VertexClass::Some => "SOME",
            VertexClass::None => "NONE",
        }
    }
}

impl std::fmt::Display for VertexClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown vertex class {0:?}")]
pub struct UnknownVertexClass(pub String);

impl FromStr for VertexClass {
    type Err = UnknownVertexClass;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ALL" => Ok(VertexClass::All),
            "SOME" => Ok(VertexClass::Some),
            "NONE" => Ok(VertexClass::None),
            other => Err(UnknownVertexClass(other.to_string())),
        }
    }
}

/// An undirected tree on the vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    offsets: Vec<usize>,
    adjacency: Vec<Vertex>,
}

impl Tree {
    /// Builds and validates a tree on `n` vertices from an edge slice.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, TreeError> {
        let labelled: Vec<(u64, u64)> = edges.iter().map(|&(u, v)| (u as u64, v as u64)).collect();
        let lines: Vec<usize> = (1..=edges.len()).collect();
        build_checked(n, &labelled, &lines, edges.len())
    }

    /// Builds a tree from edges already known to form a tree.
    fn from_edges_unchecked(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        debug_assert_eq!(edges.len() + 1, n.max(1));
        let mut offsets = vec![0usize; n + 1];
        for &(u, v) in edges {
            offsets[u + 1] += 1;
            offsets[v + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut adjacency = vec![0; 2 * edges.len()];
        for &(u, v) in edges {
            adjacency[fill[u]] = v;
            fill[u] += 1;
            adjacency[fill[v]] = u;
            fill[v] += 1;
        }
        for v in 0..n {
            adjacency[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        Tree { offsets, adjacency }
    }

    /// The single-vertex tree.
    pub fn singleton() -> Self {
        Tree {
            offsets: vec![0, 0],
            adjacency: Vec::new(),
        }
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        assert!(n >= 1, "a path needs at least one vertex");
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges_unchecked(n, &edges)
    }

    /// The star with center `0` and leaves `1..=leaves`.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::from_edges_unchecked(leaves + 1, &edges)
    }

    /// A spider: center `0` with one path ("leg") per entry of `legs`, each
    /// of the given number of vertices. Leg vertices are numbered
    /// consecutively from the center outwards, leg by leg.
    pub fn spider(legs: &[usize]) -> Self {
        let n = 1 + legs.iter().sum::<usize>();
        let mut edges = Vec::with_capacity(n - 1);
        let mut next = 1;
        for &len in legs {
            assert!(len >= 1, "spider legs need at least one vertex");
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Self::from_edges_unchecked(n, &edges)
    }

    /// Decodes a Prüfer sequence into the labeled tree on `n` vertices it
    /// encodes.
    ///
    /// # Panics
    /// If `seq.len() != n - 2` (for `n >= 2`) or any entry is `>= n`.
    pub fn from_prufer(n: usize, seq: &[Vertex]) -> Self {
        assert!(n >= 1);
        if n == 1 {
            assert!(seq.is_empty());
            return Self::singleton();
        }
        assert_eq!(seq.len(), n - 2, "Prüfer sequence must have length n - 2");
        let mut degree = vec![1usize; n];
        for &x in seq {
            assert!(x < n, "Prüfer entry {x} out of range");
            degree[x] += 1;
        }
        // Linear-time decoding: `ptr` scans for the smallest leaf, and a
        // freshly created leaf smaller than `ptr` is consumed immediately.
        let mut edges = Vec::with_capacity(n - 1);
        let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
        let mut leaf = ptr;
        for &x in seq {
            edges.push((leaf, x));
            degree[x] -= 1;
            if degree[x] == 1 && x < ptr {
                leaf = x;
            } else {
                ptr += 1;
                while degree[ptr] != 1 {
                    ptr += 1;
                }
                leaf = ptr;
            }
        }
        edges.push((leaf, n - 1));
        Self::from_edges_unchecked(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.len() / 2
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.n()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), VertexOutOfRange> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Neighbors of `v`, ascending.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v))
        })
    }

    /// Vertices of degree at least 3, ascending.
    pub fn branch_vertices(&self) -> Vec<Vertex> {
        (0..self.n()).filter(|&v| self.degree(v) >= 3).collect()
    }

    /// Renders the tree in the canonical edge-list format: one `u v` line per
    /// edge with `u < v`, sorted. The one-vertex tree is written as `n 1`.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        if self.n() == 1 {
            out.push_str("n 1\n");
            return out;
        }
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    /// Roots the tree at `root`. See [`RootedTree`].
    pub fn root_at(&self, root: Vertex) -> Result<RootedTree<'_>, VertexOutOfRange> {
        RootedTree::new(self, root)
    }
}

impl FromStr for Tree {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_edge_list(s)
    }
}

/// Parses the edge-list text format.
///
/// Blank lines and lines starting with `#` are ignored. The first remaining
/// line may be a header `n <count>`; every other line holds two labels. Without
/// a header, `n` is one more than the largest label. Labels are never
/// compacted, so an unused label makes the input disconnected.
pub fn parse_edge_list(text: &str) -> Result<Tree, TreeError> {
    let mut header: Option<usize> = None;
    let mut seen_content = false;
    let mut edges: Vec<(u64, u64)> = Vec::new();
    let mut lines: Vec<usize> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let malformed = || TreeError::MalformedLine {
            line,
            text: raw.to_string(),
        };
        let mut tokens = content.split_whitespace();
        let (first, second) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => return Err(malformed()),
        };
        if first == "n" {
            if seen_content {
                return Err(malformed());
            }
            let count: usize = second.parse().map_err(|_| malformed())?;
            if count == 0 {
                return Err(TreeError::Empty { line });
            }
            header = Some(count);
        } else {
            let u: u64 = first.parse().map_err(|_| malformed())?;
            let v: u64 = second.parse().map_err(|_| malformed())?;
            edges.push((u, v));
            lines.push(line);
        }
        seen_content = true;
    }

    let n = match header {
        Some(n) => n,
        None => match edges.iter().map(|&(u, v)| u.max(v)).max() {
            Some(max) => usize::try_from(max)
                .ok()
                .and_then(|m| m.checked_add(1))
                .ok_or(TreeError::LabelOutOfRange {
                    line: lines[0],
                    label: max,
                    n: usize::MAX,
                })?,
            None => return Err(TreeError::Empty { line: last_line }),
        },
    };
    build_checked(n, &edges, &lines, last_line)
}

fn build_checked(
    n: usize,
    edges: &[(u64, u64)],
    lines: &[usize],
    last_line: usize,
) -> Result<Tree, TreeError> {
    if n == 0 {
        return Err(TreeError::Empty { line: last_line });
    }
    for (&(u, v), &line) in edges.iter().zip(lines) {
        for label in [u, v] {
            if label >= n as u64 {
                return Err(TreeError::LabelOutOfRange { line, label, n });
            }
        }
    }

    // With too few edges to connect n vertices the input is rejected anyway,
    // so union-find runs over compacted labels instead of all n.
    let sparse = n > edges.len() + 1;
    let mut compact: HashMap<usize, usize> = HashMap::new();
    let mut parent: Vec<usize> = if sparse { Vec::new() } else { (0..n).collect() };
    let mut slot = |label: usize, parent: &mut Vec<usize>| -> usize {
        if !sparse {
            return label;
        }
        *compact.entry(label).or_insert_with(|| {
            parent.push(parent.len());
            parent.len() - 1
        })
    };

    let mut seen = HashSet::with_capacity(edges.len());
    let mut plain = Vec::with_capacity(edges.len());
    let mut merges = 0;
    for (&(u, v), &line) in edges.iter().zip(lines) {
        let (u, v) = (u as usize, v as usize);
        if u == v {
            return Err(TreeError::SelfLoop { line, vertex: u });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(TreeError::DuplicateEdge { line, u, v });
        }
        let (su, sv) = (slot(u, &mut parent), slot(v, &mut parent));
        let (ru, rv) = (find(&mut parent, su), find(&mut parent, sv));
        if ru == rv {
            return Err(TreeError::CycleDetected { line, u, v });
        }
        parent[ru] = rv;
        merges += 1;
        plain.push((u, v));
    }
    let components = n - merges;
    if components != 1 {
        return Err(TreeError::Disconnected {
            line: last_line,
            components,
        });
    }
    Ok(Tree::from_edges_unchecked(n, &plain))
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// A tree together with a root, the parent and depth of every vertex, and
/// ordered child lists.
///
/// Built by a breadth-first traversal from the root. Child lists are ascending
/// by label. `bfs_order` lists vertices by nondecreasing depth, and the
/// children of each vertex occupy a contiguous run of it, so positions in
/// that order form a second, cache-friendly indexing of the vertices.
#[derive(Debug, Clone)]
pub struct RootedTree<'a> {
    tree: &'a Tree,
    root: Vertex,
    parent: Vec<Vertex>,
    depth: Vec<usize>,
    order: Vec<Vertex>,
    position: Vec<usize>,
    // Children of the vertex at position p sit at positions
    // child_begin[p]..child_begin[p + 1].
    child_begin: Vec<usize>,
}

const NO_PARENT: Vertex = Vertex::MAX;

impl<'a> RootedTree<'a> {
    pub fn new(tree: &'a Tree, root: Vertex) -> Result<Self, VertexOutOfRange> {
        tree.check_vertex(root)?;
        let n = tree.n();
        let mut parent = vec![NO_PARENT; n];
        let mut depth = vec![usize::MAX; n];
        let mut position = vec![0; n];
        let mut order = Vec::with_capacity(n);
        let mut child_begin = Vec::with_capacity(n + 1);
        depth[root] = 0;
        order.push(root);
        // `order` doubles as the queue. Neighbor lists are ascending, so every
        // run of children is ascending by label.
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            position[u] = head;
            child_begin.push(order.len());
            head += 1;
            for &w in tree.neighbors(u) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    order.push(w);
                }
            }
        }
        child_begin.push(n);
        Ok(RootedTree {
            tree,
            root,
            parent,
            depth,
            order,
            position,
            child_begin,
        })
    }

    pub fn tree(&self) -> &'a Tree {
        self.tree
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn n(&self) -> usize {
        self.tree.n()
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        Some(self.parent[v]).filter(|&p| p != NO_PARENT)
    }

    /// Edge distance from the root.
    pub fn depth(&self, v: Vertex) -> usize {
        self.depth[v]
    }

    /// Children of `v`, ascending by label.
    pub fn children(&self, v: Vertex) -> &[Vertex] {
        &self.order[self.child_positions(self.position[v])]
    }

    /// Vertices in breadth-first order from the root.
    pub fn bfs_order(&self) -> &[Vertex] {
        &self.order
    }

    /// Index of `v` in [`bfs_order`](Self::bfs_order).
    pub fn position(&self, v: Vertex) -> usize {
        self.position[v]
    }

    /// Positions of the children of the vertex at position `p`.
    pub fn child_positions(&self, p: usize) -> std::ops::Range<usize> {
        self.child_begin[p]..self.child_begin[p + 1]
    }

    pub fn max_depth(&self) -> usize {
        self.order.last().map_or(0, |&v| self.depth[v])
    }
}

/// A uniformly random labeled tree on `n` vertices, decoded from a random
/// Prüfer sequence. Deterministic for a fixed `(n, seed)`.
///
/// # Panics
/// If `n == 0`.
pub fn random_tree(n: usize, seed: u64) -> Tree {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_tree_with(n, &mut rng)
}

/// Like [`random_tree`], drawing from a caller-supplied generator.
pub fn random_tree_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Tree {
    assert!(n >= 1, "a tree needs at least one vertex");
    if n == 1 {
        return Tree::singleton();
    }
    let seq: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Tree::from_prufer(n, &seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn edge_set(t: &Tree) -> Vec<(Vertex, Vertex)> {
        t.edges().collect()
    }

    #[test]
    fn parses_small_path() {
        let t = parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!(t.n(), 3);
        assert_eq!(edge_set(&t), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn parses_single_vertex_header() {
        let t = parse_edge_list("n 1").unwrap();
        assert_eq!(t.n(), 1);
        assert_eq!(t.edge_count(), 0);
    }

    #[test]
    fn header_and_comments() {
        let t = parse_edge_list("# a star\nn 4\n\n0 1\n# middle\n0 2\n0 3\n").unwrap();
        assert_eq!(t, Tree::star(3));
    }

    #[test]
    fn rejects_triangle() {
        let err = parse_edge_list("0 1\n1 2\n2 0").unwrap_err();
        assert_eq!(
            err,
            TreeError::CycleDetected {
                line: 3,
                u: 2,
                v: 0
            }
        );
    }

    #[test]
    fn rejects_defects_with_line_numbers() {
        assert_eq!(
            parse_edge_list("0 1\n1 1\n").unwrap_err(),
            TreeError::SelfLoop { line: 2, vertex: 1 }
        );
        assert_eq!(
            parse_edge_list("0 1\n1 2\n2 1\n").unwrap_err(),
            TreeError::DuplicateEdge {
                line: 3,
                u: 2,
                v: 1
            }
        );
        assert_eq!(
            parse_edge_list("n 3\n0 1\n1 3\n").unwrap_err(),
            TreeError::LabelOutOfRange {
                line: 3,
                label: 3,
                n: 3
            }
        );
        assert!(matches!(
            parse_edge_list("0 1\nfoo bar\n").unwrap_err(),
            TreeError::MalformedLine { line: 2, .. }
        ));
        assert!(matches!(
            parse_edge_list("0 1 2\n").unwrap_err(),
            TreeError::MalformedLine { line: 1, .. }
        ));
        assert!(matches!(
            parse_edge_list("0 1\nn 2\n").unwrap_err(),
            TreeError::MalformedLine { line: 2, .. }
        ));
        assert!(matches!(
            parse_edge_list("").unwrap_err(),
            TreeError::Empty { .. }
        ));
        assert!(matches!(
            parse_edge_list("# only\n").unwrap_err(),
            TreeError::Empty { .. }
        ));
        assert!(matches!(
            parse_edge_list("n 0").unwrap_err(),
            TreeError::Empty { .. }
        ));
    }

    #[test]
    fn rejects_gaps_and_forests() {
        // Label 2 never appears.
        assert_eq!(
            parse_edge_list("0 1\n1 3\n").unwrap_err(),
            TreeError::Disconnected {
                line: 2,
                components: 2
            }
        );
        assert_eq!(
            parse_edge_list("0 1\n2 3\n").unwrap_err(),
            TreeError::Disconnected {
                line: 2,
                components: 2
            }
        );
        assert_eq!(
            parse_edge_list("n 3").unwrap_err(),
            TreeError::Disconnected {
                line: 1,
                components: 3
            }
        );
        // Huge declared count with few edges must not allocate per vertex.
        assert!(matches!(
            parse_edge_list("n 1000000000000\n0 1\n").unwrap_err(),
            TreeError::Disconnected { .. }
        ));
        assert!(matches!(
            parse_edge_list("n 100000000\n0 1\n1 2\n2 0\n").unwrap_err(),
            TreeError::CycleDetected { line: 4, .. }
        ));
    }

    #[test]
    fn from_edges_uses_edge_index() {
        let err = Tree::from_edges(3, &[(0, 1), (0, 1)]).unwrap_err();
        assert_eq!(
            err,
            TreeError::DuplicateEdge {
                line: 2,
                u: 0,
                v: 1
            }
        );
        assert_eq!(err.line(), 2);
    }

    #[test]
    fn rooting_at_path_center() {
        let p3 = Tree::path(3);
        let r = p3.root_at(1).unwrap();
        assert_eq!(r.children(1), &[0, 2]);
        assert_eq!((r.depth(0), r.depth(2)), (1, 1));
        assert_eq!(r.parent(1), None);
    }

    #[test]
    fn rooting_at_path_end() {
        let p3 = Tree::path(3);
        let r = p3.root_at(0).unwrap();
        assert_eq!(r.parent(2), Some(1));
        assert_eq!(r.parent(1), Some(0));
        assert_eq!(r.depth(2), 2);
        assert_eq!(r.max_depth(), 2);
    }

    #[test]
    fn rooting_star_at_leaf() {
        let star = Tree::star(3);
        let r = star.root_at(3).unwrap();
        assert_eq!(r.depth(0), 1);
        assert_eq!((r.depth(1), r.depth(2)), (2, 2));
        assert_eq!(r.children(0), &[1, 2]);
        assert_eq!(
            star.root_at(4).unwrap_err(),
            VertexOutOfRange { vertex: 4, n: 4 }
        );
    }

    #[test]
    fn branch_vertex_sets() {
        assert!(Tree::path(5).branch_vertices().is_empty());
        assert_eq!(Tree::star(3).branch_vertices(), vec![0]);
        let double =
            Tree::from_edges(8, &[(0, 1), (0, 2), (0, 3), (0, 4), (4, 5), (4, 6), (4, 7)]).unwrap();
        assert_eq!(double.branch_vertices(), vec![0, 4]);
    }

    #[test]
    fn random_tree_small_cases() {
        for seed in 0..20 {
            assert_eq!(random_tree(1, seed).n(), 1);
            assert_eq!(edge_set(&random_tree(2, seed)), vec![(0, 1)]);
        }
    }

    #[test]
    fn random_tree_is_uniform_on_three_vertices() {
        // The three labeled trees on {0,1,2} are identified by their center.
        let draws = 100_000;
        let mut counts = [0usize; 3];
        for seed in 0..draws {
            let t = random_tree(3, seed);
            let center = (0..3).find(|&v| t.degree(v) == 2).unwrap();
            counts[center] += 1;
        }
        for c in counts {
            let freq = c as f64 / draws as f64;
            assert!((freq - 1.0 / 3.0).abs() <= 0.05 / 3.0, "frequency {freq}");
        }
    }

    #[test]
    fn prufer_decodes_known_sequence() {
        // Sequence [3, 3, 3, 4] on 6 vertices: 0,1,2 hang off 3, then 3-4, 4-5.
        let t = Tree::from_prufer(6, &[3, 3, 3, 4]);
        assert_eq!(edge_set(&t), vec![(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]);
    }

    #[test]
    fn canonical_edge_list() {
        assert_eq!(Tree::singleton().to_edge_list(), "n 1\n");
        assert_eq!(Tree::path(2).to_edge_list(), "0 1\n");
        assert_eq!(Tree::spider(&[2, 1]).to_edge_list(), "0 1\n0 3\n1 2\n");
    }

    fn naive_distance(t: &Tree, from: Vertex, to: Vertex) -> usize {
        // Depth-first search for the unique path, tracking its length.
        let mut stack = vec![(from, usize::MAX, 0usize)];
        while let Some((u, came_from, d)) = stack.pop() {
            if u == to {
                return d;
            }
            for &w in t.neighbors(u) {
                if w != came_from {
                    stack.push((w, u, d + 1));
                }
            }
        }
        unreachable!("tree is connected")
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn random_trees_are_valid(n in 1usize..=64, seed in any::<u64>()) {
            let t = random_tree(n, seed);
            prop_assert_eq!(t.n(), n);
            prop_assert_eq!(t.edge_count(), n - 1);
            for u in 0..n {
                for &v in t.neighbors(u) {
                    prop_assert!(u != v);
                    prop_assert!(t.has_edge(v, u));
                }
                prop_assert!(t.neighbors(u).windows(2).all(|w| w[0] < w[1]));
            }
            // Revalidate through the checked constructor (connectivity, no cycles).
            let edges: Vec<_> = t.edges().collect();
            prop_assert_eq!(Tree::from_edges(n, &edges).unwrap(), t.clone());
            prop_assert_eq!(random_tree(n, seed), t);
        }
    }

    proptest! {
        #[test]
        fn edge_list_round_trip(n in 1usize..=200, seed in any::<u64>()) {
            let t = random_tree(n, seed);
            let text = t.to_edge_list();
            let back = parse_edge_list(&text).unwrap();
            prop_assert_eq!(&back, &t);
            prop_assert_eq!(back.to_edge_list(), text);
        }

        #[test]
        fn rooted_tree_invariants(n in 1usize..=50, seed in any::<u64>(), root_pick in any::<usize>()) {
            let t = random_tree(n, seed);
            let root = root_pick % n;
            let r = t.root_at(root).unwrap();
            prop_assert_eq!(r.depth(root), 0);
            let total: usize = (0..n).map(|u| r.children(u).len()).sum();
            prop_assert_eq!(total, n - 1);
            for u in 0..n {
                prop_assert_eq!(r.depth(u), naive_distance(&t, root, u));
                match r.parent(u) {
                    None => prop_assert_eq!(u, root),
                    Some(p) => {
                        prop_assert!(t.has_edge(p, u));
                        prop_assert_eq!(r.depth(u), r.depth(p) + 1);
                        prop_assert!(r.children(p).contains(&u));
                    }
                }
                prop_assert!(r.children(u).windows(2).all(|w| w[0] < w[1]));
            }
            prop_assert!(r.bfs_order().windows(2).all(|w| r.depth(w[0]) <= r.depth(w[1])));
        }
    }
}
