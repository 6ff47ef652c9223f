use super::interp::{glyph_center, interpolate_style};
use super::{ElementPair, PathStrategy, ShapeStyle, StageTimes, Strategy, TransGlyph};
use crate::geometry::{lerp, Point};

/// The element's glyph plus, for the unconnected simultaneous strategy, the
/// separate line growing out of axis 1.
#[derive(Debug, Clone, PartialEq)]
pub struct StrategyGlyphs {
    pub glyph: TransGlyph,
    pub auxiliary: Option<TransGlyph>,
}

/// Evaluates one element under a transformation strategy.
///
/// The shape style only shapes the connected strategy; the two unconnected
/// strategies draw straight lines from axis 1.
pub fn evaluate_strategy(
    strategy: Strategy,
    pair: &ElementPair,
    s: StageTimes,
    style: ShapeStyle,
    path: PathStrategy,
) -> StrategyGlyphs {
    match strategy {
        Strategy::SimultaneousConnected => StrategyGlyphs {
            glyph: interpolate_style(pair, style, path, s),
            auxiliary: None,
        },
        Strategy::SuccessiveUnconnected => StrategyGlyphs {
            glyph: successive(pair, s, path),
            auxiliary: None,
        },
        Strategy::SimultaneousUnconnected => {
            let (dot, line) = unconnected(pair, s, path);
            StrategyGlyphs {
                glyph: dot,
                auxiliary: Some(line),
            }
        }
    }
}

/// The dot travels to its value on axis 1 and shrinks to line width
/// (pos, or shape when that comes first); the size stage then stretches it
/// toward axis 2.
fn successive(pair: &ElementPair, s: StageTimes, path: PathStrategy) -> TransGlyph {
    let c = pair.dot.center;
    let [first, second] = pair.line;
    let x_progress = match path {
        PathStrategy::ShortestPath => s.pos,
        PathStrategy::VerticalOnly => s.size,
    };
    let anchor = Point::new(lerp(c.x, first.x, x_progress), lerp(c.y, first.y, s.pos));
    let tip = anchor.lerp(second + (anchor - first), s.size);
    TransGlyph {
        vertices: vec![anchor, tip],
        stroke_width: lerp(2.0 * pair.dot.radius, pair.line_width, s.pos.max(s.shape)),
        opacity: 1.0,
        color_index: pair.color_index,
    }
}

/// Returns `(dot, line)`: the dot moves toward the line midpoint and
/// shrinks to radius 0 while the line grows from axis 1 to axis 2 at
/// constant parametric speed.
fn unconnected(pair: &ElementPair, s: StageTimes, path: PathStrategy) -> (TransGlyph, TransGlyph) {
    let morph = 0.5 * (s.shape + s.size);
    let dot = TransGlyph::dot(
        glyph_center(pair, path, s),
        pair.dot.radius * (1.0 - morph),
        pair.color_index,
    );
    let line = TransGlyph {
        vertices: vec![pair.line[0], pair.line[0].lerp(pair.line[1], morph)],
        stroke_width: pair.line_width,
        opacity: 1.0,
        color_index: pair.color_index,
    };
    (dot, line)
}
