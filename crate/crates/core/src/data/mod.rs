//! Multivariate graph model: nodes with cluster membership and attribute
//! vectors, undirected edges, JSON ingestion and synthetic attributes.

mod generate;
mod graph;
mod io;

pub use generate::{generate_attributes, random_graph, PatternKind};
pub use graph::{validate, AttributeTable, Edge, MultivariateGraph, Node, Violation};
pub use io::{load_graph, serialize_graph, SCHEMA_VERSION};

/// The Les Misérables co-appearance network (77 nodes, 254 edges,
/// 11 clusters) as shipped with this crate, without attributes.
pub const LES_MISERABLES_JSON: &str = include_str!("../../data/lesmis.json");

/// Parses the bundled Les Misérables network.
pub fn les_miserables() -> MultivariateGraph {
    load_graph(LES_MISERABLES_JSON).expect("bundled dataset is valid")
}
