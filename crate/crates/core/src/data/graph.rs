use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::geometry::Point;

#[derive(Debug, Clone, PartialEq)]
pub struct Node {
    pub id: String,
    pub label: String,
    pub cluster_id: usize,
    /// Pinned position in arbitrary layout units.
    pub fixed_position: Option<Point>,
}

impl Node {
    pub fn new(id: impl Into<String>, cluster_id: usize) -> Self {
        let id = id.into();
        Self {
            label: id.clone(),
            id,
            cluster_id,
            fixed_position: None,
        }
    }
}

/// Undirected edge between two node ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub source: String,
    pub target: String,
}

impl Edge {
    pub fn new(source: impl Into<String>, target: impl Into<String>) -> Self {
        Self {
            source: source.into(),
            target: target.into(),
        }
    }

    /// Orientation-free key: `(a, b)` and `(b, a)` map to the same value.
    pub fn key(&self) -> (&str, &str) {
        if self.source <= self.target {
            (&self.source, &self.target)
        } else {
            (&self.target, &self.source)
        }
    }

    /// Stable identifier used for link primitives.
    pub fn element_id(&self) -> String {
        let (a, b) = self.key();
        format!("{a}--{b}")
    }
}

/// Per-node attribute vectors. `values[i]` belongs to `nodes[i]` of the
/// owning graph. An empty table (no names) means "not yet synthesized".
#[derive(Debug, Clone, PartialEq, Default)]
pub struct AttributeTable {
    pub names: Vec<String>,
    pub values: Vec<Vec<f64>>,
}

impl AttributeTable {
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn column(&self, index: usize) -> impl Iterator<Item = f64> + '_ {
        self.values.iter().map(move |row| row[index])
    }

    /// `[min, max]` of one attribute over all nodes.
    pub fn domain(&self, index: usize) -> (f64, f64) {
        self.column(index)
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)))
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct MultivariateGraph {
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
    pub attributes: AttributeTable,
    pub cluster_count: usize,
}

impl MultivariateGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Map from node id to its position in `nodes`. The first occurrence
    /// wins when ids repeat.
    pub fn index_map(&self) -> HashMap<&str, usize> {
        let mut map = HashMap::with_capacity(self.nodes.len());
        for (i, n) in self.nodes.iter().enumerate() {
            map.entry(n.id.as_str()).or_insert(i);
        }
        map
    }

    pub fn degrees(&self) -> Vec<usize> {
        let index = self.index_map();
        let mut deg = vec![0; self.nodes.len()];
        for e in &self.edges {
            for id in [&e.source, &e.target] {
                if let Some(&i) = index.get(id.as_str()) {
                    deg[i] += 1;
                }
            }
        }
        deg
    }

    pub fn with_attributes(mut self, attributes: AttributeTable) -> Self {
        self.attributes = attributes;
        self
    }
}

/// A single broken invariant, reported by [`validate`].
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    DuplicateNodeId {
        index: usize,
        id: String,
    },
    UnknownEndpoint {
        edge: usize,
        id: String,
    },
    SelfLoop {
        edge: usize,
        id: String,
    },
    DuplicateEdge {
        edge: usize,
        source: String,
        target: String,
    },
    ClusterOutOfRange {
        node: usize,
        cluster: usize,
        cluster_count: usize,
    },
    NonFinitePosition {
        node: usize,
    },
    TooFewAttributes {
        count: usize,
    },
    AttributeRows {
        expected: usize,
        found: usize,
    },
    AttributeArity {
        node: usize,
        expected: usize,
        found: usize,
    },
    NonFiniteAttribute {
        node: usize,
        attribute: String,
    },
    DuplicateAttributeName {
        name: String,
    },
}

impl Violation {
    /// JSON-style path of the offending element.
    pub fn path(&self) -> String {
        match self {
            Violation::DuplicateNodeId { index, .. } => format!("nodes[{index}].id"),
            Violation::UnknownEndpoint { edge, .. }
            | Violation::SelfLoop { edge, .. }
            | Violation::DuplicateEdge { edge, .. } => format!("edges[{edge}]"),
            Violation::ClusterOutOfRange { node, .. } => format!("nodes[{node}].cluster"),
            Violation::NonFinitePosition { node } => format!("nodes[{node}].x"),
            Violation::TooFewAttributes { .. }
            | Violation::AttributeRows { .. }
            | Violation::DuplicateAttributeName { .. } => "attributes".to_string(),
            Violation::AttributeArity { node, .. } => format!("nodes[{node}].attrs"),
            Violation::NonFiniteAttribute { node, attribute } => {
                format!("nodes[{node}].attrs.{attribute}")
            }
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let path = self.path();
        match self {
            Violation::DuplicateNodeId { id, .. } => write!(f, "{path}: duplicate node id \"{id}\""),
            Violation::UnknownEndpoint { id, .. } => {
                write!(f, "{path}: endpoint \"{id}\" does not name a node")
            }
            Violation::SelfLoop { id, .. } => write!(f, "{path}: self-loop on \"{id}\""),
            Violation::DuplicateEdge { source, target, .. } => {
                write!(f, "{path}: duplicate edge \"{source}\"–\"{target}\"")
            }
            Violation::ClusterOutOfRange {
                cluster, cluster_count, ..
            } => {
                write!(f, "{path}: cluster {cluster} outside [0, {cluster_count})")
            }
            Violation::NonFinitePosition { .. } => write!(f, "{path}: fixed position is not finite"),
            Violation::TooFewAttributes { count } => {
                write!(f, "{path}: {count} attribute(s), at least 2 required")
            }
            Violation::AttributeRows { expected, found } => {
                write!(f, "{path}: {found} attribute rows for {expected} nodes")
            }
            Violation::AttributeArity { expected, found, .. } => {
                write!(f, "{path}: {found} values, expected {expected}")
            }
            Violation::NonFiniteAttribute { .. } => write!(f, "{path}: value is not finite"),
            Violation::DuplicateAttributeName { name } => {
                write!(f, "{path}: attribute \"{name}\" listed twice")
            }
        }
    }
}

/// Checks every graph invariant; an empty result means the graph is valid.
pub fn validate(graph: &MultivariateGraph) -> Vec<Violation> {
    let mut out = Vec::new();

    let mut seen = HashSet::new();
    for (index, node) in graph.nodes.iter().enumerate() {
        if !seen.insert(node.id.as_str()) {
            out.push(Violation::DuplicateNodeId {
                index,
                id: node.id.clone(),
            });
        }
        if node.cluster_id >= graph.cluster_count {
            out.push(Violation::ClusterOutOfRange {
                node: index,
                cluster: node.cluster_id,
                cluster_count: graph.cluster_count,
            });
        }
        if node.fixed_position.is_some_and(|p| !p.is_finite()) {
            out.push(Violation::NonFinitePosition { node: index });
        }
    }

    let mut seen_edges = HashSet::new();
    for (edge, e) in graph.edges.iter().enumerate() {
        let mut endpoints_ok = true;
        for id in [&e.source, &e.target] {
            if !seen.contains(id.as_str()) {
                out.push(Violation::UnknownEndpoint { edge, id: id.clone() });
                endpoints_ok = false;
            }
        }
        if e.source == e.target {
            out.push(Violation::SelfLoop {
                edge,
                id: e.source.clone(),
            });
            continue;
        }
        if endpoints_ok && !seen_edges.insert(e.key()) {
            out.push(Violation::DuplicateEdge {
                edge,
                source: e.source.clone(),
                target: e.target.clone(),
            });
        }
    }

    let table = &graph.attributes;
    if !table.is_empty() {
        let n = table.names.len();
        if n < 2 {
            out.push(Violation::TooFewAttributes { count: n });
        }
        let mut names = HashSet::new();
        for name in &table.names {
            if !names.insert(name.as_str()) {
                out.push(Violation::DuplicateAttributeName { name: name.clone() });
            }
        }
        if table.values.len() != graph.nodes.len() {
            out.push(Violation::AttributeRows {
                expected: graph.nodes.len(),
                found: table.values.len(),
            });
        }
        for (node, row) in table.values.iter().enumerate() {
            if row.len() != n {
                out.push(Violation::AttributeArity {
                    node,
                    expected: n,
                    found: row.len(),
                });
                continue;
            }
            for (name, v) in table.names.iter().zip(row) {
                if !v.is_finite() {
                    out.push(Violation::NonFiniteAttribute {
                        node,
                        attribute: name.clone(),
                    });
                }
            }
        }
    }

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> MultivariateGraph {
        MultivariateGraph {
            nodes: vec![Node::new("a", 0), Node::new("b", 0), Node::new("c", 1)],
            edges: vec![Edge::new("a", "b"), Edge::new("b", "c")],
            attributes: AttributeTable::default(),
            cluster_count: 2,
        }
    }

    #[test]
    fn valid_graph_has_no_violations() {
        assert!(validate(&triangle()).is_empty());
    }

    #[test]
    fn self_loop_is_one_violation() {
        let mut g = triangle();
        g.edges.push(Edge::new("a", "a"));
        let v = validate(&g);
        assert_eq!(v.len(), 1);
        assert!(matches!(v[0], Violation::SelfLoop { .. }));
    }

    #[test]
    fn cluster_equal_to_count_is_one_violation() {
        let mut g = triangle();
        g.nodes[2].cluster_id = 2;
        let v = validate(&g);
        assert_eq!(v.len(), 1);
        assert!(matches!(v[0], Violation::ClusterOutOfRange { cluster: 2, .. }));
    }

    #[test]
    fn reversed_duplicate_edge_is_detected() {
        let mut g = triangle();
        g.edges.push(Edge::new("b", "a"));
        let v = validate(&g);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].path(), "edges[2]");
    }

    #[test]
    fn unknown_endpoint_names_the_id() {
        let mut g = triangle();
        g.edges.push(Edge::new("a", "Z"));
        let v = validate(&g);
        assert_eq!(v.len(), 1);
        assert!(v[0].to_string().contains("\"Z\""));
    }

    #[test]
    fn attribute_arity_and_finiteness() {
        let mut g = triangle();
        g.attributes = AttributeTable {
            names: vec!["p".into(), "q".into()],
            values: vec![vec![1.0, 2.0], vec![1.0], vec![f64::NAN, 0.0]],
        };
        let v = validate(&g);
        assert_eq!(v.len(), 2);
        assert_eq!(v[1].path(), "nodes[2].attrs.p");
    }
}
