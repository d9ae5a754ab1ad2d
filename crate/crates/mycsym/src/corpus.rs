//! Corpora of small graphs for exhaustive verification.
//!
//! [`generate_corpus`] enumerates every graph on 1..=n_max vertices up to
//! isomorphism by scanning all edge subsets and deduplicating, so the corpus
//! is complete by construction. Refinement signatures bucket the candidates
//! first; full isomorphism tests run only within a bucket. Larger or
//! hand-picked corpora come from graph6 files via [`load_corpus`].

use std::collections::BTreeMap;

use thiserror::Error;

use crate::aut::{are_isomorphic, wl_signature};
use crate::graph::{isolated_vertices, is_star, Graph};
use crate::graph6::{parse_graph6, Graph6Error};
use crate::twins::twin_partition;

/// Largest `n_max` for in-process enumeration; 2^(n(n-1)/2) edge subsets stop
/// being reasonable after this.
pub const MAX_GENERATED_N: usize = 7;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("corpus generation is limited to n_max <= {MAX_GENERATED_N}, got {n_max}; load larger graphs from a file")]
    NMaxTooLarge { n_max: usize },
    #[error("line {line}: {source}")]
    BadLine {
        line: usize,
        #[source]
        source: Graph6Error,
    },
}

/// Hypothesis filters used to carve a corpus down to the graphs an identity
/// speaks about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFilter {
    /// No two vertices share an open neighborhood.
    TwinFree,
    /// Some pair of vertices shares an open neighborhood.
    HasTwins,
    HasIsolated,
    NoIsolated,
    /// Not a star K_{1,l} (and in particular not K₁ or K₂).
    NonStar,
    NotK1,
    NotK2,
}

impl GraphFilter {
    pub fn admits(&self, g: &Graph) -> bool {
        match self {
            GraphFilter::TwinFree => twin_partition(g).is_twin_free(),
            GraphFilter::HasTwins => !twin_partition(g).is_twin_free(),
            GraphFilter::HasIsolated => !isolated_vertices(g).is_empty(),
            GraphFilter::NoIsolated => isolated_vertices(g).is_empty(),
            GraphFilter::NonStar => !is_star(g),
            GraphFilter::NotK1 => g.n() != 1,
            GraphFilter::NotK2 => !(g.n() == 2 && g.edge_count() == 1),
        }
    }
}

pub fn admits_all(g: &Graph, filters: &[GraphFilter]) -> bool {
    filters.iter().all(|f| f.admits(g))
}

/// Every graph on 1..=n_max vertices, one representative per isomorphism
/// class, ordered by vertex count and then by first appearance in the
/// edge-subset scan.
pub fn generate_corpus(n_max: usize) -> Result<Vec<Graph>, CorpusError> {
    if n_max > MAX_GENERATED_N {
        return Err(CorpusError::NMaxTooLarge { n_max });
    }
    let mut out = Vec::new();
    for n in 1..=n_max {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let mut reps: Vec<Graph> = Vec::new();
        let mut buckets: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
        for mask in 0u64..1 << pairs.len() {
            let mut g = Graph::new(n);
            for (b, &(i, j)) in pairs.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    g.add_edge(i, j);
                }
            }
            let bucket = buckets.entry(wl_signature(&g)).or_default();
            if bucket.iter().any(|&k| are_isomorphic(&reps[k], &g)) {
                continue;
            }
            bucket.push(reps.len());
            reps.push(g);
        }
        out.extend(reps);
    }
    Ok(out)
}

/// Parses one graph6 value per non-empty line; errors carry 1-based line
/// numbers.
pub fn load_corpus(text: &str) -> Result<Vec<Graph>, CorpusError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        out.push(parse_graph6(line).map_err(|source| CorpusError::BadLine { line: i + 1, source })?);
    }
    Ok(out)
}

/// Two pendant edges u–v and w–z bridged by `x_count` common neighbors of v
/// and w. The x's form one twin class; everything else is rigid except for
/// the left-right swap, which fixes every x — so the minimum twin cover never
/// determines, and the determining number is `x_count`.
pub fn pendant_hub_family(x_count: usize) -> Graph {
    assert!(x_count >= 1, "the family needs at least one shared neighbor");
    let mut g = Graph::new(4 + x_count);
    g.add_edge(0, 1); // u–v
    g.add_edge(2, 3); // w–z
    for x in 4..4 + x_count {
        g.add_edge(1, x);
        g.add_edge(2, x);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, disjoint_union, empty_graph, parse_edge_list, VertexSet};
    use crate::graph6::encode_graph6;
    use crate::params::{determining_number, is_determining_set};
    use crate::twins::{minimum_twin_cover, quotient_graph};

    #[test]
    fn corpus_counts_match_the_graph_census() {
        let corpus = generate_corpus(6).unwrap();
        let mut by_n = [0usize; 7];
        for g in &corpus {
            by_n[g.n()] += 1;
        }
        assert_eq!(by_n[1..], [1, 2, 4, 11, 34, 156]);
        assert_eq!(corpus.len(), 208);
        assert_eq!(generate_corpus(3).unwrap().len(), 7);
    }

    #[test]
    fn corpus_has_no_isomorphic_pair() {
        let corpus = generate_corpus(4).unwrap();
        for (i, g) in corpus.iter().enumerate() {
            for h in &corpus[i + 1..] {
                assert!(!are_isomorphic(g, h));
            }
        }
    }

    #[test]
    fn generation_is_capped() {
        assert!(matches!(
            generate_corpus(MAX_GENERATED_N + 1),
            Err(CorpusError::NMaxTooLarge { .. })
        ));
    }

    #[test]
    fn corpus_round_trips_through_graph6() {
        let corpus = generate_corpus(4).unwrap();
        let text: String =
            corpus.iter().map(|g| encode_graph6(g).unwrap() + "\n").collect();
        let back = load_corpus(&text).unwrap();
        assert_eq!(back.len(), corpus.len());
        for (g, h) in corpus.iter().zip(&back) {
            assert!(are_isomorphic(g, h));
        }
    }

    #[test]
    fn load_reports_the_failing_line() {
        let err = load_corpus("Bw\n\n~~~\n").unwrap_err();
        match err {
            CorpusError::BadLine { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn filters_express_the_hypotheses() {
        let c5 = cycle_graph(5);
        let k2_3k1 = disjoint_union(&complete_graph(2), &empty_graph(3));
        assert!(GraphFilter::TwinFree.admits(&c5));
        assert!(!GraphFilter::TwinFree.admits(&k2_3k1));
        assert!(GraphFilter::HasTwins.admits(&k2_3k1));
        assert!(GraphFilter::HasIsolated.admits(&k2_3k1));
        assert!(GraphFilter::NoIsolated.admits(&c5));
        assert!(GraphFilter::NonStar.admits(&c5));
        assert!(!GraphFilter::NonStar.admits(&complete_graph(2)));
        assert!(!GraphFilter::NonStar.admits(&crate::graph::star_graph(4)));
        assert!(!GraphFilter::NotK1.admits(&complete_graph(1)));
        assert!(!GraphFilter::NotK2.admits(&complete_graph(2)));
        assert!(GraphFilter::NotK2.admits(&empty_graph(2)));
        assert!(admits_all(&c5, &[GraphFilter::TwinFree, GraphFilter::NoIsolated]));
        assert!(!admits_all(&c5, &[GraphFilter::TwinFree, GraphFilter::HasIsolated]));
    }

    #[test]
    fn pendant_hub_family_has_the_advertised_shape() {
        let g = pendant_hub_family(2);
        assert_eq!(g.n(), 6);
        assert_eq!(g.degrees(), vec![1, 3, 3, 1, 2, 2]);
        let q = quotient_graph(&g);
        let p5 = parse_edge_list("0 1\n1 2\n2 3\n3 4", 5).unwrap();
        assert!(are_isomorphic(&q.graph, &p5));
        // The minimum twin cover is {5}, but the left-right swap fixes it.
        let cover = minimum_twin_cover(&g);
        assert_eq!(cover.members, VertexSet::from([5]));
        assert!(!is_determining_set(&g, &cover.members));
        for k in 1..=3 {
            let g = pendant_hub_family(k);
            assert_eq!(determining_number(&g).0, k, "x_count {k}");
        }
    }
}
