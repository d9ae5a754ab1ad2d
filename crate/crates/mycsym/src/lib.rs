//! Generalized Mycielskian graphs and exact symmetry parameters.
//!
//! The library builds the generalized Mycielskian μ_t(G) of a graph, computes
//! its symmetry parameters by exact constrained search — determining number,
//! distinguishing number, cost of a 2-distinguishing coloring, distinguishing
//! index — and ships a verification harness that checks the structural
//! identities relating the parameters of G and μ_t(G) over exhaustive corpora
//! of small graphs.
//!
//! Module map:
//! * [`graph`] / [`graph6`] — simple graphs, constructors, parsing, graph6 I/O
//! * [`aut`] — constrained automorphism and isomorphism search
//! * [`mycielskian`] — μ_t construction with vertex roles
//! * [`twins`] — twin classes, twin covers, quotient graphs
//! * [`params`] — the symmetry parameters themselves
//! * [`corpus`] / [`registry`] / [`report`] — corpora of small graphs, the
//!   identity registry, and machine-readable verification reports

mod bits;

pub mod aut;
pub mod corpus;
pub mod graph;
pub mod graph6;
pub mod mycielskian;
pub mod params;
pub mod registry;
pub mod report;
pub mod twins;

pub use aut::{
    are_isomorphic, enumerate_automorphisms, find_automorphism, is_automorphism, orbits,
    Automorphisms, Coloring, SearchConstraint, DEFAULT_ENUMERATION_CAP,
};
pub use graph::{
    complete_graph, components, cycle_graph, disjoint_union, empty_graph, is_star,
    isolated_vertices, open_neighborhood, parse_edge_list, star_graph, Graph, GraphError, Perm,
    VertexSet,
};
pub use graph6::{encode_graph6, parse_graph6, Graph6Error};
pub use mycielskian::{
    classical_M, generalized_mycielskian, iterated_mycielskian, mycielskian, root_component,
    MycError, Mycielskian, RootComponent, VertexRole,
};
pub use params::{
    cost_2_distinguishing, determining_number, determining_number_containing,
    distinguishing_index, distinguishing_number, is_determining_set, is_distinguishing_coloring,
    param_report, CostTwoResult, DistResult, EdgeDistResult, ParamReport, ParamSelection,
    DEFAULT_BUDGET,
};
pub use twins::{
    lifted_cover, minimum_twin_cover, quotient_commutes_check, quotient_graph, twin_partition,
    QuotientGraph, TwinCover, TwinError, TwinPartition,
};
