//! Twin classes, twin covers, and quotient graphs.
//!
//! Two vertices are twins when they have the same open neighborhood (so twins
//! are never adjacent, and every pair of isolated vertices is a twin pair).
//! Twinness is an equivalence; the quotient graph has one vertex per class and
//! is always twin-free. A minimum twin cover keeps all but one vertex of each
//! class, and here always drops the lowest index, so every result is
//! deterministic.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::mycielskian::generalized_mycielskian;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TwinError {
    #[error("the given set is not a minimum twin cover (class {class:?} keeps {kept} members out)")]
    NotACover { class: Vec<usize>, kept: usize },
}

/// Partition of the vertices into twin classes, ordered by smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinPartition {
    classes: Vec<VertexSet>,
    class_of: Vec<usize>,
}

impl TwinPartition {
    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn class_index(&self) -> &[usize] {
        &self.class_of
    }

    /// True when every class is a singleton.
    pub fn is_twin_free(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }

    pub fn largest_class(&self) -> usize {
        self.classes.iter().map(|c| c.len()).max().unwrap_or(0)
    }
}

pub fn twin_partition(g: &Graph) -> TwinPartition {
    let n = g.n();
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut class_of = vec![usize::MAX; n];
    for v in 0..n {
        if class_of[v] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut class = VertexSet::from([v]);
        class_of[v] = id;
        for u in v + 1..n {
            if class_of[u] == usize::MAX && g.row(u) == g.row(v) {
                class_of[u] = id;
                class.insert(u);
            }
        }
        classes.push(class);
    }
    TwinPartition { classes, class_of }
}

/// A minimum twin cover: all vertices except one representative per class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinCover {
    /// The cover itself.
    pub members: VertexSet,
    /// The representative left out of each class (its lowest index).
    pub excluded: VertexSet,
}

impl TwinCover {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

pub fn minimum_twin_cover(g: &Graph) -> TwinCover {
    let part = twin_partition(g);
    let mut members = VertexSet::new();
    let mut excluded = VertexSet::new();
    for class in part.classes() {
        let rep = *class.first().unwrap();
        excluded.insert(rep);
        members.extend(class.iter().copied().filter(|&v| v != rep));
    }
    TwinCover { members, excluded }
}

/// The quotient by the twin partition: one vertex per class, classes adjacent
/// when their members are.
#[derive(Clone, Debug)]
pub struct QuotientGraph {
    pub graph: Graph,
    /// Quotient vertex of each original vertex.
    pub class_of: Vec<usize>,
    /// Lowest original vertex of each quotient vertex.
    pub representatives: Vec<usize>,
}

pub fn quotient_graph(g: &Graph) -> QuotientGraph {
    let part = twin_partition(g);
    let k = part.classes().len();
    let representatives: Vec<usize> = part.classes().iter().map(|c| *c.first().unwrap()).collect();
    let mut q = Graph::new(k);
    for a in 0..k {
        for b in a + 1..k {
            if g.has_edge(representatives[a], representatives[b]) {
                q.add_edge(a, b);
            }
        }
    }
    debug_assert!(twin_partition(&q).is_twin_free());
    QuotientGraph { graph: q, class_of: part.class_index().to_vec(), representatives }
}

/// Lifts a minimum twin cover of G to one of μ_t(G): every level-copy of every
/// cover vertex and, when G has isolated vertices, the interior-level copies
/// of the one isolated vertex the cover leaves out.
///
/// Indices refer to the layout of [`generalized_mycielskian`].
pub fn lifted_cover(g: &Graph, cover: &TwinCover, t: usize) -> Result<VertexSet, TwinError> {
    assert!(t >= 1);
    let part = twin_partition(g);
    for class in part.classes() {
        let kept: Vec<usize> = class.iter().copied().filter(|v| !cover.members.contains(v)).collect();
        if kept.len() != 1 {
            return Err(TwinError::NotACover {
                class: class.iter().copied().collect(),
                kept: kept.len(),
            });
        }
    }
    let n = g.n();
    let mut out = VertexSet::new();
    for &v in &cover.members {
        for s in 0..=t {
            out.insert(s * n + v);
        }
    }
    let spare_isolated = (0..n).find(|&v| g.degree(v) == 0 && !cover.members.contains(&v));
    if let Some(u) = spare_isolated {
        for s in 1..t {
            out.insert(s * n + u);
        }
    }
    Ok(out)
}

/// Checks that quotienting commutes with the Mycielskian construction, up to
/// isomorphism: with Q the quotient of G and N the quotient of μ_t(G), either
/// μ_t(Q) ≅ N (no isolated vertices in G), or μ_t(Q) ≅ N + (t−1)K₁ (isolated
/// vertices present, which collapse across levels in N).
pub fn quotient_commutes_check(g: &Graph, t: usize) -> bool {
    let q = quotient_graph(g);
    let myc_of_quotient = match generalized_mycielskian(&q.graph, t) {
        Ok(m) => m,
        Err(_) => return false,
    };
    let myc = match generalized_mycielskian(g, t) {
        Ok(m) => m,
        Err(_) => return false,
    };
    let quotient_of_myc = quotient_graph(myc.graph());
    let has_isolated = (0..g.n()).any(|v| g.degree(v) == 0);
    let rhs = if has_isolated {
        crate::graph::disjoint_union(&quotient_of_myc.graph, &crate::graph::empty_graph(t - 1))
    } else {
        quotient_of_myc.graph
    };
    crate::aut::are_isomorphic(myc_of_quotient.graph(), &rhs)
}
