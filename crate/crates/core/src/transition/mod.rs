//! Representation mapping (dots → lines, links → ∅, ∅ → axes) and the
//! geometric interpolation styles evaluated at normalized stage times.

mod accordion;
mod interp;
mod strategy;

pub use accordion::accordion_expand;
pub use interp::{
    glyph_center, interpolate_bent, interpolate_geometric, interpolate_oriented, interpolate_style, position_path,
    BENT_COLLAPSE_PX, SHORT_SEGMENT_FRACTION,
};
pub use strategy::{evaluate_strategy, StrategyGlyphs};

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::layout::{DotGlyph, NlScene, PcScene};

/// Default arm length of the bent line at the end of the shape stage, as a
/// fraction of the centre→target distance.
pub const DEFAULT_ARM_FRACTION: f64 = 0.15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum ChangeKind {
    Shape,
    Size,
    Pos,
}

impl ChangeKind {
    pub const ALL: [ChangeKind; 3] = [ChangeKind::Shape, ChangeKind::Size, ChangeKind::Pos];
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum ShapeStyle {
    /// Plain linear dot→line interpolation.
    Geometric,
    /// Short segment that already carries the final slope.
    OrientedLine,
    /// Two arms from the glyph centre that aim at the final endpoints.
    #[serde(rename_all = "camelCase")]
    BentLine { arm_fraction: f64 },
}

impl ShapeStyle {
    pub fn bent() -> Self {
        ShapeStyle::BentLine {
            arm_fraction: DEFAULT_ARM_FRACTION,
        }
    }

    pub fn check(&self) -> Result<()> {
        match *self {
            ShapeStyle::BentLine { arm_fraction } if !(arm_fraction > 0.0 && arm_fraction <= 0.5) => {
                Err(Error::argument(
                    "shapeStyle.bentLine.armFraction",
                    format!("{arm_fraction} outside (0, 0.5]"),
                ))
            }
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum PathStrategy {
    /// Relocate vertically only; the horizontal offset is taken up while
    /// the arms grow toward the absolute endpoints.
    VerticalOnly,
    ShortestPath,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Strategy {
    /// Dots move to axis 1 while shrinking, then elongate toward axis 2.
    SuccessiveUnconnected,
    /// A line grows out of axis 1 while the dot shrinks and moves onto it.
    SimultaneousUnconnected,
    /// Arms grow out of the dot itself toward both axes.
    SimultaneousConnected,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [
        Strategy::SuccessiveUnconnected,
        Strategy::SimultaneousUnconnected,
        Strategy::SimultaneousConnected,
    ];
}

/// Normalized progress of each change kind, each in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct StageTimes {
    pub shape: f64,
    pub pos: f64,
    pub size: f64,
}

impl StageTimes {
    pub const START: StageTimes = StageTimes::all(0.0);
    pub const END: StageTimes = StageTimes::all(1.0);

    pub const fn new(shape: f64, pos: f64, size: f64) -> Self {
        Self { shape, pos, size }
    }

    pub const fn all(s: f64) -> Self {
        Self::new(s, s, s)
    }

    pub fn get(&self, kind: ChangeKind) -> f64 {
        match kind {
            ChangeKind::Shape => self.shape,
            ChangeKind::Size => self.size,
            ChangeKind::Pos => self.pos,
        }
    }

    pub fn set(&mut self, kind: ChangeKind, value: f64) {
        match kind {
            ChangeKind::Shape => self.shape = value,
            ChangeKind::Size => self.size = value,
            ChangeKind::Pos => self.pos = value,
        }
    }

    /// `1 − s` per component.
    pub fn complement(&self) -> Self {
        Self::new(1.0 - self.shape, 1.0 - self.pos, 1.0 - self.size)
    }
}

/// Intermediate glyph. Coincident vertices describe a dot whose diameter is
/// `stroke_width`.
#[derive(Debug, Clone, PartialEq)]
pub struct TransGlyph {
    pub vertices: Vec<Point>,
    pub stroke_width: f64,
    pub opacity: f64,
    pub color_index: usize,
}

impl TransGlyph {
    pub fn dot(center: Point, radius: f64, color_index: usize) -> Self {
        Self {
            vertices: vec![center, center],
            stroke_width: 2.0 * radius,
            opacity: 1.0,
            color_index,
        }
    }

    pub fn is_dot(&self) -> bool {
        self.vertices.windows(2).all(|w| w[0] == w[1])
    }

    /// Mean of the first and last vertex.
    pub fn anchor(&self) -> Point {
        let first = self.vertices[0];
        let last = *self.vertices.last().expect("glyph has vertices");
        first.midpoint(last)
    }
}

/// One node's start dot and its final two-axis line.
#[derive(Debug, Clone, PartialEq)]
pub struct ElementPair {
    pub node_id: String,
    pub dot: DotGlyph,
    pub line: [Point; 2],
    pub line_width: f64,
    pub color_index: usize,
}

impl ElementPair {
    pub fn line_midpoint(&self) -> Point {
        self.line[0].midpoint(self.line[1])
    }

    pub fn line_length(&self) -> f64 {
        self.line[0].distance(self.line[1])
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ElementMapping {
    /// In node order of the NL scene.
    pub pairs: Vec<ElementPair>,
    /// Element ids of links that fade out.
    pub fading_links: Vec<String>,
    /// Attribute names of the axes that fade in.
    pub appearing_axes: Vec<String>,
}

/// Pairs every NL dot with the segment its polyline draws between the first
/// two PC axes.
pub fn map_elements(nl: &NlScene, pc: &PcScene) -> Result<ElementMapping> {
    if pc.axes.len() < 2 {
        return Err(Error::Consistency(format!(
            "PC scene has {} axes, need 2",
            pc.axes.len()
        )));
    }
    let lines: HashMap<&str, usize> = pc
        .polylines
        .iter()
        .enumerate()
        .map(|(i, p)| (p.node_id.as_str(), i))
        .collect();
    if lines.len() != pc.polylines.len() {
        return Err(Error::Consistency("duplicate node in PC scene".into()));
    }
    if nl.dots.len() != pc.polylines.len() {
        return Err(Error::Consistency(format!(
            "NL scene has {} dots, PC scene {} lines",
            nl.dots.len(),
            pc.polylines.len()
        )));
    }
    let pairs = nl
        .dots
        .iter()
        .map(|dot| {
            let line = lines
                .get(dot.node_id.as_str())
                .map(|&i| &pc.polylines[i])
                .ok_or_else(|| Error::Consistency(format!("node \"{}\" has no PC line", dot.node_id)))?;
            Ok(ElementPair {
                node_id: dot.node_id.clone(),
                dot: dot.clone(),
                line: [line.vertices[0], line.vertices[1]],
                line_width: line.stroke_width,
                color_index: line.color_index,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ElementMapping {
        pairs,
        fading_links: nl.links.iter().map(|l| l.element_id.clone()).collect(),
        appearing_axes: pc.axes[..2].iter().map(|a| a.attribute_name.clone()).collect(),
    })
}
