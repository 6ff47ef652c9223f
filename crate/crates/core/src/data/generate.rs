//! Synthetic attributes following common parallel-coordinates patterns,
//! and seeded random graphs.
//!
//! Draws come from [`crate::rng`]; nothing else touches the stream, so a
//! fixed seed yields the same table on every platform.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::graph::{AttributeTable, Edge, MultivariateGraph, Node};
use crate::error::{Error, Result};
use crate::rng::Stream;

/// Upper end of generated values; the lower end is 0.
pub const VALUE_MAX: f64 = 100.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum PatternKind {
    NegativeCorrelation,
    PositiveCorrelation,
    Outliers(usize),
    UniformRandom,
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternKind::NegativeCorrelation => f.write_str("negative-correlation"),
            PatternKind::PositiveCorrelation => f.write_str("positive-correlation"),
            PatternKind::Outliers(k) => write!(f, "outliers:{k}"),
            PatternKind::UniformRandom => f.write_str("uniform"),
        }
    }
}

impl FromStr for PatternKind {
    type Err = String;

    /// Accepts `negative-correlation`, `positive-correlation`, `uniform`
    /// and `outliers:K`.
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "negative-correlation" => Ok(PatternKind::NegativeCorrelation),
            "positive-correlation" => Ok(PatternKind::PositiveCorrelation),
            "uniform" => Ok(PatternKind::UniformRandom),
            _ => {
                let k = s
                    .strip_prefix("outliers:")
                    .ok_or_else(|| format!("unknown pattern \"{s}\""))?;
                k.parse()
                    .map(PatternKind::Outliers)
                    .map_err(|_| format!("bad outlier count \"{k}\""))
            }
        }
    }
}

/// Synthesizes `count` attributes named `attr1..attrN` for every node.
///
/// Attributes 1 and 2 carry the pattern; the rest are uniform in
/// `[0, 100]`. Correlated patterns place each node on a distinct rank slot
/// with jitter inside the slot, so ranks on attribute 2 are exactly the
/// reversed (or identical) ranks on attribute 1. `Outliers(k)` draws the
/// bulk from a narrow band and the `k` outliers from the extreme 5% at
/// either end.
pub fn generate_attributes(
    graph: &MultivariateGraph,
    count: usize,
    pattern: PatternKind,
    seed: u64,
) -> Result<AttributeTable> {
    if count < 2 {
        return Err(Error::argument("attributeCount", format!("{count} < 2")));
    }
    let n = graph.node_count();
    if n == 0 {
        return Err(Error::argument("graph", "no nodes"));
    }
    if let PatternKind::Outliers(k) = pattern {
        if k < 1 || k > n / 4 {
            return Err(Error::argument(
                "pattern",
                format!("outlier count {k} outside [1, {}]", n / 4),
            ));
        }
    }

    let mut rng = Stream::new(seed);
    let mut columns: Vec<Vec<f64>> = Vec::with_capacity(count);
    let slot = VALUE_MAX / n as f64;

    match pattern {
        PatternKind::NegativeCorrelation | PatternKind::PositiveCorrelation => {
            let rank = rng.permutation(n);
            let first = rank.iter().map(|&r| slot * (r as f64 + rng.range(0.1, 0.9))).collect();
            let second = rank
                .iter()
                .map(|&r| {
                    let r2 = match pattern {
                        PatternKind::NegativeCorrelation => n - 1 - r,
                        _ => r,
                    };
                    slot * (r2 as f64 + rng.range(0.1, 0.9))
                })
                .collect();
            columns.push(first);
            columns.push(second);
        }
        PatternKind::Outliers(k) => {
            let order = rng.permutation(n);
            let mut is_outlier = vec![false; n];
            for &i in &order[..k] {
                is_outlier[i] = true;
            }
            for (lo, hi) in [(40.0, 60.0), (25.0, 75.0)] {
                let col = is_outlier
                    .iter()
                    .map(|&out| {
                        if out {
                            if rng.coin() {
                                rng.range(95.0, VALUE_MAX)
                            } else {
                                rng.range(0.0, 5.0)
                            }
                        } else {
                            rng.range(lo, hi)
                        }
                    })
                    .collect();
                columns.push(col);
            }
        }
        PatternKind::UniformRandom => {}
    }

    while columns.len() < count {
        columns.push((0..n).map(|_| rng.range(0.0, VALUE_MAX)).collect());
    }

    let values = (0..n).map(|i| columns.iter().map(|c| c[i]).collect()).collect();
    Ok(AttributeTable {
        names: (1..=count).map(|i| format!("attr{i}")).collect(),
        values,
    })
}

/// Random graph with `node_count` nodes `n00, n01, …` spread over
/// `cluster_count` clusters; each node pair is linked with probability
/// `edge_probability`. Carries no attributes.
pub fn random_graph(
    node_count: usize,
    edge_probability: f64,
    cluster_count: usize,
    seed: u64,
) -> Result<MultivariateGraph> {
    if node_count == 0 {
        return Err(Error::argument("nodeCount", "no nodes"));
    }
    if cluster_count == 0 || cluster_count > node_count {
        return Err(Error::argument(
            "clusterCount",
            format!("{cluster_count} outside [1, {node_count}]"),
        ));
    }
    if !(0.0..=1.0).contains(&edge_probability) {
        return Err(Error::argument(
            "edgeProbability",
            format!("{edge_probability} outside [0, 1]"),
        ));
    }
    let width = (node_count - 1).to_string().len().max(2);
    let mut rng = Stream::new(seed);
    // every cluster gets at least one member
    let mut clusters: Vec<usize> = (0..node_count)
        .map(|i| if i < cluster_count { i } else { rng.below(cluster_count) })
        .collect();
    let order = rng.permutation(node_count);
    clusters = order.iter().map(|&i| clusters[i]).collect();
    let nodes: Vec<Node> = clusters
        .iter()
        .enumerate()
        .map(|(i, &c)| Node::new(format!("n{i:0width$}"), c))
        .collect();
    let mut edges = Vec::new();
    for i in 0..node_count {
        for j in i + 1..node_count {
            if rng.unit() < edge_probability {
                edges.push(Edge::new(nodes[i].id.clone(), nodes[j].id.clone()));
            }
        }
    }
    Ok(MultivariateGraph {
        nodes,
        edges,
        cluster_count,
        ..Default::default()
    })
}
