//! Graph JSON format (`schemaVersion` "1").
//!
//! ```json
//! { "schemaVersion": "1", "clusterCount": 2,
//!   "nodes": [{"id": "a", "label": "A", "cluster": 0, "x": 1.0, "y": 2.0,
//!              "attrs": {"attr1": 3.5, "attr2": 7.0}}],
//!   "edges": [{"source": "a", "target": "b"}] }
//! ```
//!
//! `x`/`y` are optional but must appear together. `attrs` is optional; when
//! any node carries it, all nodes must carry the same keys. Attribute order
//! is the key order of the first node.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use super::graph::{validate, AttributeTable, Edge, MultivariateGraph, Node};
use crate::error::{Error, Result};
use crate::geometry::Point;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct GraphDocument {
    schema_version: String,
    cluster_count: usize,
    nodes: Vec<NodeRecord>,
    edges: Vec<EdgeRecord>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NodeRecord {
    id: String,
    label: String,
    cluster: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    x: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    y: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    attrs: Option<Map<String, Value>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeRecord {
    source: String,
    target: String,
}

fn parse_error(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        path: path.into(),
        message: message.into(),
    }
}

/// Parses and validates a graph document.
pub fn load_graph(document: &str) -> Result<MultivariateGraph> {
    let de = &mut serde_json::Deserializer::from_str(document);
    let doc: GraphDocument = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        parse_error(path, e.into_inner().to_string())
    })?;

    if doc.schema_version != SCHEMA_VERSION {
        return Err(parse_error(
            "schemaVersion",
            format!("unsupported version \"{}\"", doc.schema_version),
        ));
    }

    let mut nodes = Vec::with_capacity(doc.nodes.len());
    for (i, rec) in doc.nodes.iter().enumerate() {
        let fixed_position = match (rec.x, rec.y) {
            (Some(x), Some(y)) => Some(Point::new(x, y)),
            (None, None) => None,
            (Some(_), None) => return Err(parse_error(format!("nodes[{i}].y"), "missing, x is present")),
            (None, Some(_)) => return Err(parse_error(format!("nodes[{i}].x"), "missing, y is present")),
        };
        nodes.push(Node {
            id: rec.id.clone(),
            label: rec.label.clone(),
            cluster_id: rec.cluster,
            fixed_position,
        });
    }

    let attributes = read_attributes(&doc.nodes)?;
    let graph = MultivariateGraph {
        nodes,
        edges: doc.edges.into_iter().map(|e| Edge::new(e.source, e.target)).collect(),
        attributes,
        cluster_count: doc.cluster_count,
    };

    let violations = validate(&graph);
    if violations.is_empty() {
        Ok(graph)
    } else {
        Err(Error::Validation(violations))
    }
}

fn read_attributes(records: &[NodeRecord]) -> Result<AttributeTable> {
    let Some(first) = records.iter().find_map(|r| r.attrs.as_ref()) else {
        return Ok(AttributeTable::default());
    };
    let names: Vec<String> = first.keys().cloned().collect();
    let mut values = Vec::with_capacity(records.len());
    for (i, rec) in records.iter().enumerate() {
        let attrs = rec
            .attrs
            .as_ref()
            .ok_or_else(|| parse_error(format!("nodes[{i}].attrs"), "missing while other nodes have attributes"))?;
        if let Some(extra) = attrs.keys().find(|k| !names.contains(k)) {
            return Err(parse_error(
                format!("nodes[{i}].attrs.{extra}"),
                "attribute not present on the first node",
            ));
        }
        let row = names
            .iter()
            .map(|name| {
                let path = format!("nodes[{i}].attrs.{name}");
                match attrs.get(name) {
                    Some(v) => v.as_f64().ok_or_else(|| parse_error(path, "expected a number")),
                    None => Err(parse_error(path, "missing")),
                }
            })
            .collect::<Result<Vec<f64>>>()?;
        values.push(row);
    }
    Ok(AttributeTable { names, values })
}

/// Writes the graph in the same format [`load_graph`] reads, pretty-printed
/// with a trailing newline.
pub fn serialize_graph(graph: &MultivariateGraph) -> String {
    let table = &graph.attributes;
    let nodes = graph
        .nodes
        .iter()
        .enumerate()
        .map(|(i, n)| NodeRecord {
            id: n.id.clone(),
            label: n.label.clone(),
            cluster: n.cluster_id,
            x: n.fixed_position.map(|p| p.x),
            y: n.fixed_position.map(|p| p.y),
            attrs: (!table.is_empty()).then(|| {
                table
                    .names
                    .iter()
                    .zip(&table.values[i])
                    .map(|(k, v)| (k.clone(), Value::from(*v)))
                    .collect()
            }),
        })
        .collect();
    let doc = GraphDocument {
        schema_version: SCHEMA_VERSION.to_string(),
        cluster_count: graph.cluster_count,
        nodes,
        edges: graph
            .edges
            .iter()
            .map(|e| EdgeRecord {
                source: e.source.clone(),
                target: e.target.clone(),
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("graph document serializes");
    text.push('\n');
    text
}
