//! Endpoint scenes: the structure-driven node-link layout and the
//! attribute-driven parallel coordinates arrangement, both in viewport
//! pixels.

mod force;
mod pc;

pub use force::{compute_nl_layout, DotSizing, LayoutOptions};
pub use pc::{
    attribute_to_axis_y, axis_positions, compute_pc_scene, compute_pc_scene_with, AxisPlacement, PC_LINE_WIDTH,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Point;

/// Categorical cluster colors, indexed by cluster id (wrapping past 12).
pub const PALETTE: [&str; 12] = [
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#17becf",
    "#8c564b", "#bcbd22",
];

pub fn palette_color(index: usize) -> &'static str {
    PALETTE[index % PALETTE.len()]
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Viewport {
    pub width: f64,
    pub height: f64,
    pub margin: f64,
}

impl Viewport {
    pub fn new(width: f64, height: f64, margin: f64) -> Result<Self> {
        let v = Self { width, height, margin };
        v.check()?;
        Ok(v)
    }

    pub fn check(&self) -> Result<()> {
        let ok = [self.width, self.height, self.margin].iter().all(|v| v.is_finite())
            && self.margin >= 0.0
            && self.width > 2.0 * self.margin
            && self.height > 2.0 * self.margin;
        if ok {
            Ok(())
        } else {
            Err(Error::argument(
                "viewport",
                format!(
                    "{}x{} with margin {} is not drawable",
                    self.width, self.height, self.margin
                ),
            ))
        }
    }

    /// `(min, max)` corners of the drawable area inside the margin.
    pub fn inner(&self) -> (Point, Point) {
        (
            Point::new(self.margin, self.margin),
            Point::new(self.width - self.margin, self.height - self.margin),
        )
    }

    pub fn contains_inner(&self, p: Point) -> bool {
        let (lo, hi) = self.inner();
        p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y
    }
}

impl Default for Viewport {
    fn default() -> Self {
        Self {
            width: 1600.0,
            height: 900.0,
            margin: 40.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DotGlyph {
    pub node_id: String,
    pub center: Point,
    pub radius: f64,
    pub color_index: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinkGlyph {
    pub source: usize,
    pub target: usize,
    pub element_id: String,
    pub stroke_width: f64,
}

/// Node-link scene; `dots[i]` belongs to `graph.nodes[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct NlScene {
    pub dots: Vec<DotGlyph>,
    pub links: Vec<LinkGlyph>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Axis {
    pub attribute_name: String,
    pub x: f64,
    pub y_top: f64,
    pub y_bottom: f64,
    pub domain_min: f64,
    pub domain_max: f64,
    pub opacity: f64,
}

impl Axis {
    pub fn element_id(&self) -> String {
        format!("axis:{}", self.attribute_name)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PolylineGlyph {
    pub node_id: String,
    pub vertices: Vec<Point>,
    pub stroke_width: f64,
    pub color_index: usize,
}

/// Parallel coordinates scene; `polylines[i]` belongs to `graph.nodes[i]`
/// and `polylines[i].vertices[k]` sits on `axes[k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PcScene {
    pub axes: Vec<Axis>,
    pub polylines: Vec<PolylineGlyph>,
}

impl PcScene {
    /// The scene limited to its first `count` axes.
    pub fn truncated(&self, count: usize) -> PcScene {
        PcScene {
            axes: self.axes.iter().take(count).cloned().collect(),
            polylines: self
                .polylines
                .iter()
                .map(|p| PolylineGlyph {
                    vertices: p.vertices.iter().take(count).copied().collect(),
                    ..p.clone()
                })
                .collect(),
        }
    }
}
