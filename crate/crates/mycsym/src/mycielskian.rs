//! Generalized Mycielskian construction.
//!
//! For a graph G on vertices v_0, …, v_{n−1} and `t ≥ 1`, the generalized
//! Mycielskian μ_t(G) has t+1 levels of n vertices plus one root. Level 0 is a
//! copy of G; consecutive levels are joined by the bipartite double of E(G)
//! (u_i at level s is adjacent to u_j at level s+1 iff v_i v_j ∈ E(G)); and
//! the root is adjacent to every level-t vertex, including level-t copies of
//! isolated vertices.
//!
//! Index layout: the level-s copy of v_i is `s*n + i`, the root is `(t+1)*n`.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MycError {
    #[error("the Mycielskian needs at least one level")]
    ZeroLevels,
    #[error("the Mycielskian of the empty graph is not defined")]
    EmptyBase,
    #[error("iterated construction needs at least one application")]
    ZeroIterations,
}

/// What a vertex of μ_t(G) is a copy of.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexRole {
    /// Level-0 copy of base vertex `i`.
    Original(usize),
    /// Level-`level` copy of base vertex `base`, `1 ≤ level ≤ t`.
    Shadow { level: usize, base: usize },
    Root,
}

/// μ_t(G) together with the layout data that maps vertices back to roles.
#[derive(Clone, Debug)]
pub struct Mycielskian {
    graph: Graph,
    base_n: usize,
    levels: usize,
}

impl Mycielskian {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Number of vertices of the base graph.
    pub fn base_n(&self) -> usize {
        self.base_n
    }

    /// The parameter t: number of shadow levels.
    pub fn levels(&self) -> usize {
        self.levels
    }

    pub fn root(&self) -> usize {
        self.base_n * (self.levels + 1)
    }

    pub fn vertex_role(&self, v: usize) -> VertexRole {
        assert!(v < self.graph.n());
        if v == self.root() {
            VertexRole::Root
        } else if v < self.base_n {
            VertexRole::Original(v)
        } else {
            VertexRole::Shadow { level: v / self.base_n, base: v % self.base_n }
        }
    }

    /// Index of the level-`level` copy of base vertex `base`.
    pub fn level_index(&self, level: usize, base: usize) -> usize {
        assert!(level <= self.levels && base < self.base_n);
        level * self.base_n + base
    }
}

/// Builds μ_t(G). Errors on `t = 0` or an empty base graph.
pub fn generalized_mycielskian(g: &Graph, t: usize) -> Result<Mycielskian, MycError> {
    if t == 0 {
        return Err(MycError::ZeroLevels);
    }
    let n = g.n();
    if n == 0 {
        return Err(MycError::EmptyBase);
    }
    let root = n * (t + 1);
    let mut m = Graph::new(root + 1);
    for (i, j) in g.edges() {
        m.add_edge(i, j);
        for s in 0..t {
            m.add_edge(s * n + i, (s + 1) * n + j);
            m.add_edge(s * n + j, (s + 1) * n + i);
        }
    }
    for i in 0..n {
        m.add_edge(t * n + i, root);
    }
    debug_assert_eq!(m.edge_count(), (2 * t + 1) * g.edge_count() + n);
    Ok(Mycielskian { graph: m, base_n: n, levels: t })
}

/// The classical Mycielskian μ(G) = μ_1(G).
pub fn mycielskian(g: &Graph) -> Result<Mycielskian, MycError> {
    generalized_mycielskian(g, 1)
}

/// μ applied `k ≥ 1` times; roles refer to the final application.
pub fn iterated_mycielskian(g: &Graph, k: usize) -> Result<Mycielskian, MycError> {
    if k == 0 {
        return Err(MycError::ZeroIterations);
    }
    let mut m = mycielskian(g)?;
    for _ in 1..k {
        m = mycielskian(&m.graph)?;
    }
    Ok(m)
}

/// M_k = μ^k(K₂): M_1 = C₅, M_2 is the Grötzsch graph, and so on.
#[allow(non_snake_case)]
pub fn classical_M(k: usize) -> Mycielskian {
    assert!(k >= 1);
    iterated_mycielskian(&crate::graph::complete_graph(2), k).expect("K2 iterates are well defined")
}

/// The connected component of μ_t(G) that contains the root.
#[derive(Clone, Debug)]
pub struct RootComponent {
    pub graph: Graph,
    /// `vertices[i]` is the μ_t(G) index of component vertex `i`, ascending.
    pub vertices: Vec<usize>,
    /// Set when the base graph had no edges at all; the component is then the
    /// star on the root and the level-t vertices rather than a Mycielskian of
    /// the non-isolated part.
    pub base_edgeless: bool,
}

pub fn root_component(m: &Mycielskian) -> RootComponent {
    let g = m.graph();
    let mut seen = vec![false; g.n()];
    let mut stack = vec![m.root()];
    seen[m.root()] = true;
    let mut verts = VertexSet::new();
    while let Some(v) = stack.pop() {
        verts.insert(v);
        for u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    let vertices: Vec<usize> = verts.into_iter().collect();
    let base_edgeless = (0..m.base_n()).all(|v| g.degree(v) == 0);
    RootComponent { graph: g.induced(&vertices), vertices, base_edgeless }
}
