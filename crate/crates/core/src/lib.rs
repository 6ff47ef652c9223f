//! Animated transitions between a node-link diagram and a parallel
//! coordinates plot of the same multivariate graph.
//!
//! ```
//! use nlpc_core::{les_miserables, generate_attributes, emit_keyframes, LayoutOptions,
//!                 PatternKind, Transition, Viewport, v_basic};
//!
//! let graph = les_miserables();
//! let attrs = generate_attributes(&graph, 2, PatternKind::NegativeCorrelation, 42).unwrap();
//! let tr = Transition::compile(graph.with_attributes(attrs), v_basic(), Viewport::default(),
//!                              &LayoutOptions::default()).unwrap();
//! assert_eq!(tr.total_duration(), 3.0);
//! let doc = emit_keyframes(&tr, 10.0).unwrap();
//! assert_eq!(doc.frames.len(), 31);
//! ```

pub mod data;
pub mod emit;
pub mod error;
pub mod geometry;
pub mod layout;
pub mod metrics;
pub mod pipeline;
mod rng;
pub mod timeline;
pub mod transition;

pub use data::{
    generate_attributes, les_miserables, load_graph, random_graph, serialize_graph, AttributeTable, Edge,
    MultivariateGraph, Node, PatternKind, Violation,
};
pub use emit::{emit_keyframes, emit_svg, render_frame, Frame, KeyframeDocument, Primitive, PrimitiveKind};
pub use error::{Error, Result};
pub use geometry::Point;
pub use layout::{
    compute_nl_layout, compute_pc_scene, AxisPlacement, DotSizing, LayoutOptions, NlScene, PcScene, Viewport,
};
pub use metrics::{build_report, MetricsOptions, TransitionReport};
pub use pipeline::Transition;
pub use timeline::{
    build_timeline, preset, sample, v_adv, v_basic, Direction, EasingKind, Staging, Timeline, TransitionSpec,
};
pub use transition::{
    evaluate_strategy, map_elements, ChangeKind, ElementMapping, PathStrategy, ShapeStyle, StageTimes, Strategy,
};
