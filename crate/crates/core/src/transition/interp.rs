use super::{ElementPair, PathStrategy, ShapeStyle, StageTimes, TransGlyph};
use crate::geometry::{distance_to_line, lerp, Point};

/// Length of the oriented segment at the end of the shape stage, relative
/// to the final line length.
pub const SHORT_SEGMENT_FRACTION: f64 = 0.15;

/// A bent glyph whose middle vertex is closer than this to its chord is
/// emitted as a straight two-vertex line.
pub const BENT_COLLAPSE_PX: f64 = 0.25;

/// Point reached after relocating a fraction `s` of the way from `start`
/// to `target`. `VerticalOnly` keeps `start.x`.
pub fn position_path(start: Point, target: Point, strategy: PathStrategy, s: f64) -> Point {
    match strategy {
        PathStrategy::ShortestPath => start.lerp(target, s),
        PathStrategy::VerticalOnly => Point::new(start.x, lerp(start.y, target.y, s)),
    }
}

/// Centre of the connected glyph. It follows [`position_path`] toward the
/// line midpoint during the pos stage; under `VerticalOnly` the remaining
/// horizontal offset is covered during the size stage.
pub fn glyph_center(pair: &ElementPair, path: PathStrategy, s: StageTimes) -> Point {
    let start = pair.dot.center;
    let target = pair.line_midpoint();
    let on_path = position_path(start, target, path, s.pos);
    match path {
        PathStrategy::ShortestPath => on_path,
        PathStrategy::VerticalOnly => Point::new(lerp(start.x, target.x, s.size), on_path.y),
    }
}

fn width(pair: &ElementPair, s: f64) -> f64 {
    lerp(2.0 * pair.dot.radius, pair.line_width, s)
}

/// Straight glyph centred at `center`, parallel to the final line, spanning
/// `extent` of it. `extent = 1` with `center` at the line midpoint gives
/// the final endpoints exactly.
fn centred_segment(pair: &ElementPair, center: Point, extent: f64) -> [Point; 2] {
    let shift = center - pair.line_midpoint();
    [
        center.lerp(pair.line[0] + shift, extent),
        center.lerp(pair.line[1] + shift, extent),
    ]
}

/// Both endpoints move linearly from the dot centre to the line endpoints;
/// the stroke width moves linearly from the dot diameter to the line width.
pub fn interpolate_geometric(pair: &ElementPair, t: f64) -> TransGlyph {
    let c = pair.dot.center;
    TransGlyph {
        vertices: vec![c.lerp(pair.line[0], t), c.lerp(pair.line[1], t)],
        stroke_width: width(pair, t),
        opacity: 1.0,
        color_index: pair.color_index,
    }
}

/// Oriented line. The shape stage turns the dot into a segment of length
/// `s.shape · 0.15 · L` with the final slope, the pos stage moves its
/// centre, and the size stage grows both arms symmetrically until they
/// reach the final endpoints.
pub fn interpolate_oriented(pair: &ElementPair, s: StageTimes, path: PathStrategy) -> TransGlyph {
    let center = glyph_center(pair, path, s);
    let extent = (SHORT_SEGMENT_FRACTION * s.shape).max(s.size);
    TransGlyph {
        vertices: centred_segment(pair, center, extent).to_vec(),
        stroke_width: width(pair, s.shape),
        opacity: 1.0,
        color_index: pair.color_index,
    }
}

/// Bent line. Arm tips sit on the segments from the glyph centre to the
/// final endpoints, at `s.shape · armFraction` of that distance after the
/// shape stage and advancing to the full distance over the size stage.
pub fn interpolate_bent(pair: &ElementPair, s: StageTimes, arm_fraction: f64, path: PathStrategy) -> TransGlyph {
    let center = glyph_center(pair, path, s);
    let early = arm_fraction * s.shape;
    let reach = early + s.size * (1.0 - early);
    let stroke_width = width(pair, s.shape);
    let vertices = if reach == 0.0 {
        vec![center, center]
    } else {
        let a = center.lerp(pair.line[0], reach);
        let b = center.lerp(pair.line[1], reach);
        if distance_to_line(center, a, b) < BENT_COLLAPSE_PX {
            vec![a, b]
        } else {
            vec![a, center, b]
        }
    };
    TransGlyph {
        vertices,
        stroke_width,
        opacity: 1.0,
        color_index: pair.color_index,
    }
}

/// Connected glyph for any shape style. `Geometric` under equal stage
/// times and `ShortestPath` reproduces [`interpolate_geometric`].
pub fn interpolate_style(pair: &ElementPair, style: ShapeStyle, path: PathStrategy, s: StageTimes) -> TransGlyph {
    match style {
        ShapeStyle::Geometric => {
            let center = glyph_center(pair, path, s);
            TransGlyph {
                vertices: centred_segment(pair, center, s.size).to_vec(),
                stroke_width: width(pair, s.shape),
                opacity: 1.0,
                color_index: pair.color_index,
            }
        }
        ShapeStyle::OrientedLine => interpolate_oriented(pair, s, path),
        ShapeStyle::BentLine { arm_fraction } => interpolate_bent(pair, s, arm_fraction, path),
    }
}
