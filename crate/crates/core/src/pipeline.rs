//! Everything needed to evaluate one transition, built in one step.

use crate::data::{validate, MultivariateGraph};
use crate::error::{Error, Result};
use crate::layout::{compute_nl_layout, compute_pc_scene, LayoutOptions, NlScene, PcScene, Viewport};
use crate::timeline::{build_timeline, Timeline, TransitionSpec};
use crate::transition::{map_elements, ElementMapping};

/// A compiled transition: both endpoint scenes, the element mapping and the
/// timeline, plus the inputs they came from.
#[derive(Debug, Clone)]
pub struct Transition {
    pub graph: MultivariateGraph,
    pub viewport: Viewport,
    pub spec: TransitionSpec,
    pub nl: NlScene,
    /// Two-axis scene on the first two attributes.
    pub pc: PcScene,
    pub mapping: ElementMapping,
    pub timeline: Timeline,
}

impl Transition {
    pub fn compile(
        graph: MultivariateGraph,
        spec: TransitionSpec,
        viewport: Viewport,
        layout: &LayoutOptions,
    ) -> Result<Self> {
        viewport.check()?;
        let violations = validate(&graph);
        if !violations.is_empty() {
            return Err(Error::Validation(violations));
        }
        if graph.attributes.names.len() < 2 {
            return Err(Error::argument("attributes", "graph needs at least 2 attributes"));
        }
        let nl = compute_nl_layout(&graph, &viewport, layout);
        let pc = compute_pc_scene(&graph, &graph.attributes.names[..2], &viewport)?;
        Self::from_scenes(graph, spec, viewport, nl, pc)
    }

    /// Builds from precomputed scenes; `pc` is cut down to its first two
    /// axes.
    pub fn from_scenes(
        graph: MultivariateGraph,
        spec: TransitionSpec,
        viewport: Viewport,
        nl: NlScene,
        pc: PcScene,
    ) -> Result<Self> {
        let pc = pc.truncated(2);
        let mapping = map_elements(&nl, &pc)?;
        let timeline = build_timeline(&spec, &mapping, &graph)?;
        Ok(Self {
            graph,
            viewport,
            spec,
            nl,
            pc,
            mapping,
            timeline,
        })
    }

    pub fn total_duration(&self) -> f64 {
        self.timeline.total_duration
    }
}
