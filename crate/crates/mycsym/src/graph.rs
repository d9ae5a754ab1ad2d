//! Undirected simple graphs on the vertex set `{0, …, n−1}`.
//!
//! Adjacency is one bitset row per vertex, so edge tests are O(1) and two
//! vertices have equal open neighborhoods exactly when their rows are equal.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::bits;

/// A set of vertex indices. Ordered so that iteration and serialization are
/// deterministic.
pub type VertexSet = BTreeSet<usize>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("loop edge at vertex {v}")]
    LoopEdge { v: usize },
    #[error("malformed edge line {line}: {text:?}")]
    MalformedLine { line: usize, text: String },
    #[error("permutation image {img:?} is not a bijection on 0..{n}")]
    NotAPermutation { img: Vec<usize>, n: usize },
}

/// Simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    w: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn new(n: usize) -> Self {
        let w = bits::words_for(n).max(1);
        Graph { n, w, rows: vec![0; n * w] }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::LoopEdge { v });
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Adds an undirected edge. Repeated additions are no-ops.
    ///
    /// Panics on loops or out-of-range endpoints; validated input paths go
    /// through [`Graph::from_edges`].
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u}, {v}) on {} vertices", self.n);
        let w = self.w;
        bits::set(&mut self.rows[u * w..(u + 1) * w], v);
        bits::set(&mut self.rows[v * w..(v + 1) * w], u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::test(self.row(u), v)
    }

    /// Bitset row of `v`: its open neighborhood.
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.w..(v + 1) * self.w]
    }

    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.row(v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.vertices().map(|v| self.degree(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in self.vertices() {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Subgraph induced on `verts` (strictly ascending). Vertex `i` of the
    /// result is `verts[i]`.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        debug_assert!(verts.windows(2).all(|p| p[0] < p[1]));
        let mut g = Graph::new(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Image graph under `p`: vertex `p(v)` of the result plays the role of
    /// `v`, so `relabeled` has edge `(p(u), p(v))` iff `self` has `(u, v)`.
    pub fn relabeled(&self, p: &Perm) -> Graph {
        assert_eq!(p.len(), self.n);
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(p.apply(u), p.apply(v));
        }
        g
    }

    /// Adds `count` new degree-1 vertices adjacent to `at`; they take the
    /// indices `n, …, n+count−1`.
    pub fn with_pendants(&self, at: usize, count: usize) -> Graph {
        assert!(at < self.n);
        let mut g = Graph::new(self.n + count);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for i in 0..count {
            g.add_edge(at, self.n + i);
        }
        g
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Parses edge lines `"u v"` (one edge per line, blank lines ignored) into a
/// graph on `n` vertices. Duplicate edges are dropped silently; loops and
/// out-of-range endpoints are errors.
pub fn parse_edge_list(text: &str, n: usize) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => match (a.parse::<usize>(), b.parse::<usize>()) {
                (Ok(u), Ok(v)) => (u, v),
                _ => return Err(GraphError::MalformedLine { line: i + 1, text: line.to_string() }),
            },
            _ => return Err(GraphError::MalformedLine { line: i + 1, text: line.to_string() }),
        };
        edges.push((u, v));
    }
    Graph::from_edges(n, edges)
}

/// Complete graph K_n, `n ≥ 1`.
pub fn complete_graph(n: usize) -> Graph {
    assert!(n >= 1);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// Cycle C_n with edges `i — (i+1) mod n`, `n ≥ 3`.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3);
    let mut g = Graph::new(n);
    for v in 0..n {
        g.add_edge(v, (v + 1) % n);
    }
    g
}

/// Star K_{1,leaves}: center 0, leaves `1..=leaves`. `leaves = 0` gives K₁.
pub fn star_graph(leaves: usize) -> Graph {
    let mut g = Graph::new(leaves + 1);
    for v in 1..=leaves {
        g.add_edge(0, v);
    }
    g
}

/// Edgeless graph on `n` vertices.
pub fn empty_graph(n: usize) -> Graph {
    Graph::new(n)
}

/// Disjoint union; vertices of `b` are shifted up by `a.n()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let mut g = Graph::new(a.n() + b.n());
    for (u, v) in a.edges() {
        g.add_edge(u, v);
    }
    for (u, v) in b.edges() {
        g.add_edge(a.n() + u, a.n() + v);
    }
    g
}

pub fn open_neighborhood(g: &Graph, v: usize) -> VertexSet {
    g.neighbors(v).collect()
}

pub fn isolated_vertices(g: &Graph) -> VertexSet {
    g.vertices().filter(|&v| g.degree(v) == 0).collect()
}

/// True iff the graph is a star K_{1,m} for some `m ≥ 0` (so K₁ and K₂ count).
pub fn is_star(g: &Graph) -> bool {
    let n = g.n();
    if n == 1 {
        return true;
    }
    g.edge_count() == n - 1
        && g.vertices().any(|c| g.degree(c) == n - 1 && g.vertices().all(|v| v == c || g.degree(v) <= 1))
}

/// Connected components as vertex sets, ordered by smallest member.
pub fn components(g: &Graph) -> Vec<VertexSet> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for start in g.vertices() {
        if seen[start] {
            continue;
        }
        let mut comp = VertexSet::new();
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            comp.insert(v);
            for u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Permutation of `{0, …, n−1}`, stored as its image vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Perm {
    img: Vec<usize>,
}

impl Perm {
    pub fn new(img: Vec<usize>) -> Result<Self, GraphError> {
        let n = img.len();
        let mut seen = vec![false; n];
        for &v in &img {
            if v >= n || seen[v] {
                return Err(GraphError::NotAPermutation { img, n });
            }
            seen[v] = true;
        }
        Ok(Perm { img })
    }

    pub fn identity(n: usize) -> Self {
        Perm { img: (0..n).collect() }
    }

    pub fn apply(&self, v: usize) -> usize {
        self.img[v]
    }

    pub fn len(&self) -> usize {
        self.img.len()
    }

    pub fn is_empty(&self) -> bool {
        self.img.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.img
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.img.len()];
        for (i, &v) in self.img.iter().enumerate() {
            inv[v] = i;
        }
        Perm { img: inv }
    }

    /// Vertices with `p(v) ≠ v`.
    pub fn moved(&self) -> VertexSet {
        self.img.iter().enumerate().filter(|&(i, &v)| i != v).map(|(i, _)| i).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_edge_list_builds_path() {
        let g = parse_edge_list("0 1\n1 2", 3).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn parse_edge_list_dedups_silently() {
        let g = parse_edge_list("0 1\n1 0\n0 1", 2).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn parse_edge_list_empty_text_is_edgeless() {
        let g = parse_edge_list("", 3).unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 0));
    }

    #[test]
    fn parse_edge_list_rejects_loops_and_range() {
        assert_eq!(parse_edge_list("1 1", 3), Err(GraphError::LoopEdge { v: 1 }));
        assert_eq!(parse_edge_list("0 3", 3), Err(GraphError::VertexOutOfRange { v: 3, n: 3 }));
        assert!(matches!(parse_edge_list("0 1 2", 3), Err(GraphError::MalformedLine { line: 1, .. })));
        assert!(matches!(parse_edge_list("a b", 3), Err(GraphError::MalformedLine { .. })));
    }

    #[test]
    fn constructors_have_expected_shape() {
        assert_eq!(complete_graph(1).n(), 1);
        assert_eq!(complete_graph(4).edge_count(), 6);
        assert_eq!(cycle_graph(5).degrees(), vec![2; 5]);
        assert_eq!(star_graph(3).degrees(), vec![3, 1, 1, 1]);
        assert_eq!(star_graph(0).n(), 1);
        assert_eq!(empty_graph(4).edge_count(), 0);
    }

    #[test]
    fn disjoint_union_shifts_second_operand() {
        let g = disjoint_union(&complete_graph(2), &empty_graph(3));
        assert_eq!(g.degrees(), vec![1, 1, 0, 0, 0]);
        assert_eq!(g.edge_count(), 1);
        let h = disjoint_union(&cycle_graph(3), &complete_graph(2));
        assert_eq!(h.edges(), vec![(0, 1), (0, 2), (1, 2), (3, 4)]);
    }

    #[test]
    fn neighborhood_and_isolated() {
        let c5 = cycle_graph(5);
        assert_eq!(open_neighborhood(&c5, 0), VertexSet::from([1, 4]));
        let g = disjoint_union(&complete_graph(2), &empty_graph(3));
        assert_eq!(isolated_vertices(&g), VertexSet::from([2, 3, 4]));
        assert_eq!(isolated_vertices(&c5), VertexSet::new());
    }

    #[test]
    fn star_recognition() {
        assert!(is_star(&star_graph(3)));
        assert!(is_star(&star_graph(0)));
        assert!(is_star(&complete_graph(2)));
        assert!(!is_star(&complete_graph(3)));
        assert!(!is_star(&parse_edge_list("0 1\n1 2\n2 3", 4).unwrap()));
        assert!(!is_star(&disjoint_union(&star_graph(3), &empty_graph(1))));
    }

    #[test]
    fn components_of_union() {
        let g = disjoint_union(&complete_graph(2), &empty_graph(3));
        let comps = components(&g);
        assert_eq!(comps.len(), 4);
        assert_eq!(comps[0], VertexSet::from([0, 1]));
    }

    #[test]
    fn induced_keeps_selected_edges() {
        let c5 = cycle_graph(5);
        let sub = c5.induced(&[0, 1, 2]);
        assert_eq!(sub.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn perm_validation_and_inverse() {
        assert!(Perm::new(vec![1, 2, 0]).is_ok());
        assert!(Perm::new(vec![1, 1, 0]).is_err());
        assert!(Perm::new(vec![3, 0, 1]).is_err());
        let p = Perm::new(vec![1, 2, 0]).unwrap();
        assert_eq!(p.inverse().as_slice(), &[2, 0, 1]);
        assert!(Perm::identity(4).is_identity());
        assert_eq!(p.moved(), VertexSet::from([0, 1, 2]));
    }

    #[test]
    fn relabel_moves_edges() {
        let p3 = parse_edge_list("0 1\n1 2", 3).unwrap();
        let p = Perm::new(vec![2, 1, 0]).unwrap();
        let h = p3.relabeled(&p);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
        let q = Perm::new(vec![1, 0, 2]).unwrap();
        assert_eq!(p3.relabeled(&q).edges(), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn pendants_attach_at_vertex() {
        let g = complete_graph(2).with_pendants(0, 2);
        assert_eq!(g.degrees(), vec![3, 1, 1, 1]);
        assert!(g.has_edge(0, 2) && g.has_edge(0, 3));
    }
}
