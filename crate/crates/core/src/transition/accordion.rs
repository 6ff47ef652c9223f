use crate::error::{Error, Result};
use crate::geometry::lerp;
use crate::layout::PcScene;

/// Unfolds a two-axis plot into the n-axis plot `full`.
///
/// Axes 1–2 and their vertices are copied from `two` untouched. Every
/// further axis slides out of axis 2 to its final position with opacity
/// `s`, and polyline vertices on it move from the axis-2 vertex to their
/// final place. `full` must continue `two` (same attributes and geometry on
/// axes 1–2), e.g. a scene built with [`crate::AxisPlacement::Unfolded`].
pub fn accordion_expand(two: &PcScene, full: &PcScene, s: f64) -> Result<PcScene> {
    if two.axes.len() != 2 || full.axes.len() < 2 {
        return Err(Error::Consistency(format!(
            "accordion needs 2 → n axes, got {} → {}",
            two.axes.len(),
            full.axes.len()
        )));
    }
    for (a, b) in two.axes.iter().zip(&full.axes) {
        if a.attribute_name != b.attribute_name {
            return Err(Error::Consistency(format!(
                "axis order mismatch: \"{}\" vs \"{}\"",
                a.attribute_name, b.attribute_name
            )));
        }
        if a.x != b.x || a.y_top != b.y_top || a.y_bottom != b.y_bottom {
            return Err(Error::Consistency(format!(
                "axis \"{}\" is placed differently in the two scenes",
                a.attribute_name
            )));
        }
    }
    if two.polylines.len() != full.polylines.len()
        || two
            .polylines
            .iter()
            .zip(&full.polylines)
            .any(|(a, b)| a.node_id != b.node_id)
    {
        return Err(Error::Consistency("scenes hold different polylines".into()));
    }

    let pivot = two.axes[1].x;
    let mut axes = two.axes.clone();
    axes.extend(full.axes[2..].iter().map(|a| {
        let mut a = a.clone();
        a.x = lerp(pivot, a.x, s);
        a.opacity = s;
        a
    }));
    let polylines = two
        .polylines
        .iter()
        .zip(&full.polylines)
        .map(|(short, long)| {
            let hinge = short.vertices[1];
            let mut line = short.clone();
            line.vertices
                .extend(long.vertices[2..].iter().map(|v| hinge.lerp(*v, s)));
            line
        })
        .collect();
    Ok(PcScene { axes, polylines })
}
