use super::{Axis, PcScene, PolylineGlyph, Viewport};
use crate::data::MultivariateGraph;
use crate::error::{Error, Result};

/// Stroke width of a parallel coordinates line.
pub const PC_LINE_WIDTH: f64 = 1.5;

/// Horizontal arrangement of the axes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AxisPlacement {
    /// Two axes at 30%/70% of the width; more axes equally spaced over
    /// 15%..85%.
    #[default]
    Spread,
    /// Axes 1–2 at 30%/70% like the two-axis plot, further axes equally
    /// spaced to the right of axis 2 up to 85%. Target layout of the
    /// accordion unfold.
    Unfolded,
}

/// Axis x positions for `count` axes.
pub fn axis_positions(count: usize, width: f64, placement: AxisPlacement) -> Vec<f64> {
    match (count, placement) {
        (0, _) => Vec::new(),
        (1, _) => vec![0.5 * width],
        (2, _) => vec![0.30 * width, 0.70 * width],
        (n, AxisPlacement::Spread) => {
            let (lo, hi) = (0.15 * width, 0.85 * width);
            (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
        }
        (n, AxisPlacement::Unfolded) => {
            let (lo, hi) = (0.70 * width, 0.85 * width);
            let mut xs = vec![0.30 * width, lo];
            xs.extend((3..=n).map(|k| lo + (hi - lo) * (k - 2) as f64 / (n - 2) as f64));
            xs
        }
    }
}

/// Maps a value onto an axis: `domainMin` at the bottom, `domainMax` at the
/// top, clamped to the axis; a degenerate domain maps to the midpoint.
pub fn attribute_to_axis_y(value: f64, axis: &Axis) -> Result<f64> {
    if !value.is_finite() {
        return Err(Error::argument("value", format!("{value} is not finite")));
    }
    let span = axis.domain_max - axis.domain_min;
    if span == 0.0 {
        return Ok(0.5 * (axis.y_top + axis.y_bottom));
    }
    let y = axis.y_bottom - (value - axis.domain_min) / span * (axis.y_bottom - axis.y_top);
    Ok(y.clamp(axis.y_top, axis.y_bottom))
}

pub fn compute_pc_scene<S: AsRef<str>>(
    graph: &MultivariateGraph,
    axis_order: &[S],
    viewport: &Viewport,
) -> Result<PcScene> {
    compute_pc_scene_with(graph, axis_order, viewport, AxisPlacement::Spread)
}

pub fn compute_pc_scene_with<S: AsRef<str>>(
    graph: &MultivariateGraph,
    axis_order: &[S],
    viewport: &Viewport,
    placement: AxisPlacement,
) -> Result<PcScene> {
    if axis_order.is_empty() {
        return Err(Error::argument("axisOrder", "empty"));
    }
    let table = &graph.attributes;
    if table.values.len() != graph.node_count() {
        return Err(Error::Consistency(format!(
            "{} attribute rows for {} nodes",
            table.values.len(),
            graph.node_count()
        )));
    }
    let columns = axis_order
        .iter()
        .map(|name| {
            let name = name.as_ref();
            table
                .index_of(name)
                .ok_or_else(|| Error::argument("axisOrder", format!("unknown attribute \"{name}\"")))
        })
        .collect::<Result<Vec<usize>>>()?;

    let xs = axis_positions(columns.len(), viewport.width, placement);
    let (top, bottom) = (viewport.margin, viewport.height - viewport.margin);
    let axes: Vec<Axis> = columns
        .iter()
        .zip(xs)
        .map(|(&col, x)| {
            let (domain_min, domain_max) = table.domain(col);
            Axis {
                attribute_name: table.names[col].clone(),
                x,
                y_top: top,
                y_bottom: bottom,
                domain_min,
                domain_max,
                opacity: 1.0,
            }
        })
        .collect();

    let polylines = graph
        .nodes
        .iter()
        .zip(&table.values)
        .map(|(node, row)| {
            let vertices = axes
                .iter()
                .zip(&columns)
                .map(|(axis, &col)| attribute_to_axis_y(row[col], axis).map(|y| crate::Point::new(axis.x, y)))
                .collect::<Result<Vec<_>>>()?;
            Ok(PolylineGlyph {
                node_id: node.id.clone(),
                vertices,
                stroke_width: PC_LINE_WIDTH,
                color_index: node.cluster_id,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(PcScene { axes, polylines })
}
