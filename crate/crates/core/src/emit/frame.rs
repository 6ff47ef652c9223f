use serde::{Deserialize, Serialize};

use super::keyframes::{fixed, fixed_point, fixed_points};
use crate::geometry::Point;
use crate::layout::{NlScene, PcScene};
use crate::pipeline::Transition;
use crate::timeline::sample;
use crate::transition::{evaluate_strategy, Strategy, TransGlyph};

const AXIS_WIDTH: f64 = 1.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum PrimitiveKind {
    Link,
    Axis,
    Dot,
    Polyline,
    /// The separate growing line of the unconnected simultaneous strategy.
    Segment,
    Label,
}

impl PrimitiveKind {
    /// Draw order, bottom to top.
    pub fn layer(self) -> u8 {
        match self {
            PrimitiveKind::Link => 0,
            PrimitiveKind::Axis => 1,
            PrimitiveKind::Dot | PrimitiveKind::Polyline | PrimitiveKind::Segment => 2,
            PrimitiveKind::Label => 3,
        }
    }

    pub fn is_glyph(self) -> bool {
        self.layer() == 2
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Geometry {
    Circle {
        #[serde(with = "fixed_point")]
        center: Point,
        #[serde(with = "fixed")]
        radius: f64,
    },
    Points {
        #[serde(with = "fixed_points")]
        points: Vec<Point>,
    },
    Text {
        #[serde(with = "fixed_point")]
        anchor: Point,
        text: String,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Primitive {
    pub kind: PrimitiveKind,
    pub element_id: String,
    pub geometry: Geometry,
    #[serde(with = "fixed")]
    pub stroke_width: f64,
    #[serde(with = "fixed")]
    pub opacity: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color_index: Option<usize>,
}

impl Primitive {
    /// Polyline vertices (two for lines, the centre twice for dots).
    pub fn vertices(&self) -> Vec<Point> {
        match &self.geometry {
            Geometry::Points { points } => points.clone(),
            Geometry::Circle { center, .. } => vec![*center, *center],
            Geometry::Text { anchor, .. } => vec![*anchor],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Frame {
    #[serde(rename = "t", with = "fixed")]
    pub timestamp: f64,
    pub primitives: Vec<Primitive>,
}

impl Frame {
    fn new(timestamp: f64, mut primitives: Vec<Primitive>) -> Self {
        primitives.sort_by(|a, b| {
            a.kind
                .layer()
                .cmp(&b.kind.layer())
                .then_with(|| a.element_id.cmp(&b.element_id))
        });
        Self { timestamp, primitives }
    }

    pub fn count(&self, kind: PrimitiveKind) -> usize {
        self.primitives.iter().filter(|p| p.kind == kind).count()
    }

    pub fn glyphs(&self) -> impl Iterator<Item = &Primitive> {
        self.primitives.iter().filter(|p| p.kind.is_glyph())
    }
}

fn glyph_primitive(element_id: &str, glyph: &TransGlyph) -> Primitive {
    let (kind, geometry) = if glyph.is_dot() {
        (
            PrimitiveKind::Dot,
            Geometry::Circle {
                center: glyph.vertices[0],
                radius: 0.5 * glyph.stroke_width,
            },
        )
    } else {
        (
            PrimitiveKind::Polyline,
            Geometry::Points {
                points: glyph.vertices.clone(),
            },
        )
    };
    Primitive {
        kind,
        element_id: element_id.to_string(),
        geometry,
        stroke_width: if kind == PrimitiveKind::Dot {
            0.0
        } else {
            glyph.stroke_width
        },
        opacity: glyph.opacity,
        color_index: Some(glyph.color_index),
    }
}

fn link_primitives(nl: &NlScene, opacity: f64) -> impl Iterator<Item = Primitive> + '_ {
    nl.links.iter().map(move |l| Primitive {
        kind: PrimitiveKind::Link,
        element_id: l.element_id.clone(),
        geometry: Geometry::Points {
            points: vec![nl.dots[l.source].center, nl.dots[l.target].center],
        },
        stroke_width: l.stroke_width,
        opacity,
        color_index: None,
    })
}

fn axis_primitives(pc: &PcScene, opacity: f64) -> impl Iterator<Item = Primitive> + '_ {
    pc.axes.iter().map(move |a| Primitive {
        kind: PrimitiveKind::Axis,
        element_id: a.element_id(),
        geometry: Geometry::Points {
            points: vec![Point::new(a.x, a.y_top), Point::new(a.x, a.y_bottom)],
        },
        stroke_width: AXIS_WIDTH,
        opacity: opacity * a.opacity,
        color_index: None,
    })
}

/// Attribute name above each axis, domain max at its top and min at its
/// bottom.
fn label_primitives(pc: &PcScene, opacity: f64) -> impl Iterator<Item = Primitive> + '_ {
    pc.axes.iter().flat_map(move |a| {
        let label = |suffix: &str, anchor: Point, text: String| Primitive {
            kind: PrimitiveKind::Label,
            element_id: format!("label:{}:{suffix}", a.attribute_name),
            geometry: Geometry::Text { anchor, text },
            stroke_width: 0.0,
            opacity: opacity * a.opacity,
            color_index: None,
        };
        [
            label("name", Point::new(a.x, a.y_top - 22.0), a.attribute_name.clone()),
            label("max", Point::new(a.x, a.y_top - 8.0), format!("{:.2}", a.domain_max)),
            label(
                "min",
                Point::new(a.x, a.y_bottom + 16.0),
                format!("{:.2}", a.domain_min),
            ),
        ]
    })
}

/// The node-link view on its own: links under dots.
pub fn render_nl_scene(nl: &NlScene) -> Frame {
    let mut prims: Vec<Primitive> = link_primitives(nl, 1.0).collect();
    prims.extend(
        nl.dots
            .iter()
            .map(|d| glyph_primitive(&d.node_id, &TransGlyph::dot(d.center, d.radius, d.color_index))),
    );
    Frame::new(0.0, prims)
}

/// The parallel coordinates view on its own, labels included.
pub fn render_pc_scene(pc: &PcScene, timestamp: f64) -> Frame {
    let mut prims: Vec<Primitive> = axis_primitives(pc, 1.0).collect();
    prims.extend(pc.polylines.iter().map(|p| Primitive {
        kind: PrimitiveKind::Polyline,
        element_id: p.node_id.clone(),
        geometry: Geometry::Points {
            points: p.vertices.clone(),
        },
        stroke_width: p.stroke_width,
        opacity: 1.0,
        color_index: Some(p.color_index),
    }));
    prims.extend(label_primitives(pc, 1.0));
    Frame::new(timestamp, prims)
}

/// Renders the transition at `t` seconds. Fully transparent primitives
/// are left out.
pub fn render_frame(tr: &Transition, t: f64) -> Frame {
    let s = sample(&tr.timeline, t);
    let stage_times = s.forward_stage_times(tr.timeline.direction);
    let mut prims = Vec::new();
    if s.link_opacity > 0.0 {
        prims.extend(link_primitives(&tr.nl, s.link_opacity));
    }
    if s.axis_opacity > 0.0 {
        prims.extend(axis_primitives(&tr.pc, s.axis_opacity));
    }
    for (pair, st) in tr.mapping.pairs.iter().zip(stage_times) {
        let g = evaluate_strategy(tr.spec.strategy, pair, st, tr.spec.shape_style, tr.spec.path_strategy);
        match (tr.spec.strategy, g.auxiliary) {
            (Strategy::SimultaneousUnconnected, Some(line)) => {
                let line_visible = line.vertices[0] != line.vertices[1];
                if g.glyph.stroke_width > 0.0 {
                    prims.push(glyph_primitive(&pair.node_id, &g.glyph));
                    if line_visible {
                        let mut aux = glyph_primitive(&format!("{}#aux", pair.node_id), &line);
                        aux.kind = PrimitiveKind::Segment;
                        prims.push(aux);
                    }
                } else {
                    prims.push(glyph_primitive(&pair.node_id, &line));
                }
            }
            _ => prims.push(glyph_primitive(&pair.node_id, &g.glyph)),
        }
    }
    if s.label_opacity > 0.0 {
        prims.extend(label_primitives(&tr.pc, s.label_opacity));
    }
    Frame::new(s.t, prims)
}
