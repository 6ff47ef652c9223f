//! Seeded Fruchterman–Reingold layout with a fixed iteration budget.

use super::{DotGlyph, LinkGlyph, NlScene, Viewport};
use crate::data::MultivariateGraph;
use crate::geometry::Point;
use crate::rng::Stream;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DotSizing {
    Constant(f64),
    /// `base + per_sqrt_degree · √degree`.
    DegreeProportional {
        base: f64,
        per_sqrt_degree: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LayoutOptions {
    pub seed: u64,
    pub iterations: usize,
    pub dot_sizing: DotSizing,
    pub link_width: f64,
}

impl Default for LayoutOptions {
    fn default() -> Self {
        Self {
            seed: 42,
            iterations: 300,
            dot_sizing: DotSizing::Constant(6.0),
            link_width: 1.0,
        }
    }
}

/// Uniform scale + translation taking the bounding box of `points` onto the
/// centre of the rectangle `[lo, hi]`, preserving aspect ratio.
fn fit_into(points: &[Point], lo: Point, hi: Point) -> impl Fn(Point) -> Point {
    let (mut min, mut max) = (
        Point::new(f64::INFINITY, f64::INFINITY),
        Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
    );
    for p in points {
        min = Point::new(min.x.min(p.x), min.y.min(p.y));
        max = Point::new(max.x.max(p.x), max.y.max(p.y));
    }
    let extent = max - min;
    let room = hi - lo;
    let scale = match (extent.x > 0.0, extent.y > 0.0) {
        (true, true) => (room.x / extent.x).min(room.y / extent.y),
        (true, false) => room.x / extent.x,
        (false, true) => room.y / extent.y,
        (false, false) => 0.0,
    };
    let src_mid = min.midpoint(max);
    let dst_mid = lo.midpoint(hi);
    move |p: Point| {
        let q = dst_mid + (p - src_mid) * scale;
        Point::new(q.x.clamp(lo.x, hi.x), q.y.clamp(lo.y, hi.y))
    }
}

/// Lays out the node-link view.
///
/// Pinned nodes are mapped into the viewport by one shared affine fit and
/// never move. Free nodes start at seeded random positions and take exactly
/// `options.iterations` force steps with linear cooling; when nothing is
/// pinned the result is refitted to fill the drawable area.
pub fn compute_nl_layout(graph: &MultivariateGraph, viewport: &Viewport, options: &LayoutOptions) -> NlScene {
    let n = graph.node_count();
    let (lo, hi) = viewport.inner();
    let index = graph.index_map();
    let edges: Vec<(usize, usize)> = graph
        .edges
        .iter()
        .filter_map(|e| Some((*index.get(e.source.as_str())?, *index.get(e.target.as_str())?)))
        .collect();

    let pinned: Vec<Point> = graph.nodes.iter().filter_map(|n| n.fixed_position).collect();
    let fit = fit_into(&pinned, lo, hi);
    let mut rng = Stream::new(options.seed);
    let mut pos: Vec<Point> = graph
        .nodes
        .iter()
        .map(|node| match node.fixed_position {
            Some(p) => fit(p),
            None => Point::new(rng.range(lo.x, hi.x), rng.range(lo.y, hi.y)),
        })
        .collect();
    let free: Vec<bool> = graph.nodes.iter().map(|n| n.fixed_position.is_none()).collect();

    if free.iter().any(|&f| f) && n > 1 {
        let room = hi - lo;
        let k = (room.x * room.y / n as f64).sqrt();
        let t0 = room.x.max(room.y) / 10.0;
        let mut disp = vec![Point::default(); n];
        for step in 0..options.iterations {
            disp.iter_mut().for_each(|d| *d = Point::default());
            for i in 0..n {
                for j in (i + 1)..n {
                    let mut delta = pos[i] - pos[j];
                    let mut d = delta.length();
                    if d < 1e-6 {
                        // coincident nodes: push apart along an index-derived direction
                        let angle = (i * 31 + j * 17) as f64;
                        delta = Point::new(angle.cos(), angle.sin()) * 1e-3;
                        d = 1e-3;
                    }
                    let push = delta * (k * k / (d * d));
                    disp[i] = disp[i] + push;
                    disp[j] = disp[j] - push;
                }
            }
            for &(u, v) in &edges {
                let delta = pos[u] - pos[v];
                let d = delta.length();
                let pull = delta * (d / k);
                disp[u] = disp[u] - pull;
                disp[v] = disp[v] + pull;
            }
            let temperature = t0 * (1.0 - step as f64 / options.iterations as f64);
            for i in (0..n).filter(|&i| free[i]) {
                let len = disp[i].length();
                if len > 0.0 {
                    let p = pos[i] + disp[i] * (len.min(temperature) / len);
                    pos[i] = Point::new(p.x.clamp(lo.x, hi.x), p.y.clamp(lo.y, hi.y));
                }
            }
        }
        if pinned.is_empty() {
            let refit = fit_into(&pos, lo, hi);
            pos = pos.into_iter().map(refit).collect();
        }
    }

    let degrees = graph.degrees();
    let dots = graph
        .nodes
        .iter()
        .zip(pos)
        .zip(degrees)
        .map(|((node, center), degree)| DotGlyph {
            node_id: node.id.clone(),
            center,
            radius: match options.dot_sizing {
                DotSizing::Constant(r) => r,
                DotSizing::DegreeProportional { base, per_sqrt_degree } => {
                    base + per_sqrt_degree * (degree as f64).sqrt()
                }
            },
            color_index: node.cluster_id,
        })
        .collect();
    let links = graph
        .edges
        .iter()
        .zip(&edges)
        .map(|(e, &(source, target))| LinkGlyph {
            source,
            target,
            element_id: e.element_id(),
            stroke_width: options.link_width,
        })
        .collect();
    NlScene { dots, links }
}
