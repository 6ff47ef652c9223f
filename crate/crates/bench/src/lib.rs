//! Shared inputs for the criterion benchmarks.

use nlpc_core::{
    generate_attributes, les_miserables, LayoutOptions, MultivariateGraph, PatternKind, Transition, TransitionSpec,
    Viewport,
};

/// Les Misérables with two negatively correlated attributes.
pub fn les_mis_graph() -> MultivariateGraph {
    let g = les_miserables();
    let attrs = generate_attributes(&g, 2, PatternKind::NegativeCorrelation, 42).expect("77 nodes");
    g.with_attributes(attrs)
}

pub fn les_mis_transition(spec: TransitionSpec) -> Transition {
    Transition::compile(les_mis_graph(), spec, Viewport::default(), &LayoutOptions::default())
        .expect("bundled dataset compiles")
}
