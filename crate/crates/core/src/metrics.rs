//! Proxy measures for how easy a transition is to follow and how quickly
//! it runs. None of them is combined into a single score.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::emit::{Frame, Primitive};
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::pipeline::Transition;
use crate::timeline::{sample, Timeline, TransitionSpec};
use crate::transition::{evaluate_strategy, ChangeKind, ElementMapping};

pub const DEFAULT_DT: f64 = 1.0 / 120.0;
pub const DEFAULT_OCCLUSION_THRESHOLD: f64 = 4.0;

const PROXY_NOTE: &str = "traceability proxies (occlusionEvents, maxSimultaneousMoving, totalTravel) \
and swiftness proxy (totalDuration) are engineering measures, not validated perception metrics";

/// Sample times `0, dt, 2dt, …` with `T` always included as the last one.
fn sample_times(total: f64, dt: f64) -> Vec<f64> {
    let steps = (total / dt).ceil() as usize;
    let mut times: Vec<f64> = (0..steps).map(|i| i as f64 * dt).filter(|&t| t < total).collect();
    times.push(total);
    times
}

fn check_positive(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::argument(name, format!("{v} is not positive")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Travel {
    /// Path length per element, in mapping order.
    pub per_element: Vec<f64>,
    pub total: f64,
}

/// Length of the path traced by each glyph's anchor (the mean of its end
/// vertices), measured as the polyline through samples `dt` apart.
pub fn total_travel(timeline: &Timeline, mapping: &ElementMapping, spec: &TransitionSpec, dt: f64) -> Result<Travel> {
    check_positive("dt", dt)?;
    let mut per_element = vec![0.0; mapping.pairs.len()];
    let mut previous: Option<Vec<Point>> = None;
    for t in sample_times(timeline.total_duration, dt) {
        let s = sample(timeline, t);
        let anchors: Vec<Point> = mapping
            .pairs
            .iter()
            .zip(s.forward_stage_times(timeline.direction))
            .map(|(pair, st)| {
                evaluate_strategy(spec.strategy, pair, st, spec.shape_style, spec.path_strategy)
                    .glyph
                    .anchor()
            })
            .collect();
        if let Some(prev) = &previous {
            for (acc, (a, b)) in per_element.iter_mut().zip(prev.iter().zip(&anchors)) {
                *acc += a.distance(*b);
            }
        }
        previous = Some(anchors);
    }
    let total = per_element.iter().sum();
    Ok(Travel { per_element, total })
}

/// Largest number of elements inside one of their change windows at the
/// same sampled instant.
pub fn max_simultaneous_moving(timeline: &Timeline, dt: f64) -> Result<usize> {
    check_positive("dt", dt)?;
    let moving_at = |t: f64| {
        timeline
            .tracks
            .iter()
            .filter(|tr| {
                ChangeKind::ALL.iter().any(|&k| {
                    let w = tr.window(k);
                    !w.is_empty() && w.start <= t && t < w.end
                })
            })
            .count()
    };
    Ok(sample_times(timeline.total_duration, dt)
        .into_iter()
        .map(moving_at)
        .max()
        .unwrap_or(0))
}

#[derive(Debug, Clone, Copy)]
struct BBox {
    min: Point,
    max: Point,
}

impl BBox {
    fn of(p: &Primitive) -> Self {
        let pad = match p.geometry {
            crate::emit::Geometry::Circle { radius, .. } => radius,
            _ => 0.5 * p.stroke_width,
        };
        let v = p.vertices();
        let (mut min, mut max) = (v[0], v[0]);
        for q in &v[1..] {
            min = Point::new(min.x.min(q.x), min.y.min(q.y));
            max = Point::new(max.x.max(q.x), max.y.max(q.y));
        }
        Self {
            min: Point::new(min.x - pad, min.y - pad),
            max: Point::new(max.x + pad, max.y + pad),
        }
    }

    fn overlap_area(&self, o: &BBox) -> f64 {
        let w = self.max.x.min(o.max.x) - self.min.x.max(o.min.x);
        let h = self.max.y.min(o.max.y) - self.min.y.max(o.min.y);
        if w > 0.0 && h > 0.0 {
            w * h
        } else {
            0.0
        }
    }
}

/// Element a glyph primitive belongs to; the auxiliary line of an
/// unconnected glyph counts as part of it.
fn owner(p: &Primitive) -> &str {
    p.element_id.split('#').next().unwrap_or(&p.element_id)
}

/// Number of (frame, glyph pair) combinations whose padded bounding boxes
/// overlap by more than `threshold²`.
pub fn occlusion_events(frames: &[Frame], threshold: f64) -> Result<usize> {
    check_positive("threshold", threshold)?;
    let limit = threshold * threshold;
    let mut count = 0;
    for frame in frames {
        let glyphs: Vec<(&Primitive, BBox)> = frame.glyphs().map(|p| (p, BBox::of(p))).collect();
        for (i, (p, a)) in glyphs.iter().enumerate() {
            for (q, b) in &glyphs[i + 1..] {
                if owner(p) != owner(q) && a.overlap_area(b) > limit {
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

fn orientation(a: Point, b: Point, c: Point) -> f64 {
    (b - a).cross(c - a)
}

/// Strict crossing: each segment has the other's endpoints on opposite
/// sides. Touching and collinear overlap do not count.
fn properly_intersect(p: [Point; 2], q: [Point; 2]) -> bool {
    let d1 = orientation(q[0], q[1], p[0]);
    let d2 = orientation(q[0], q[1], p[1]);
    let d3 = orientation(p[0], p[1], q[0]);
    let d4 = orientation(p[0], p[1], q[1]);
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}

/// Properly intersecting segment pairs among glyphs of different elements.
pub fn crossings(frame: &Frame) -> usize {
    let segments: Vec<(&str, [Point; 2])> = frame
        .glyphs()
        .flat_map(|p| {
            let id = owner(p);
            match &p.geometry {
                crate::emit::Geometry::Points { points } => points
                    .windows(2)
                    .filter(|w| w[0] != w[1])
                    .map(|w| (id, [w[0], w[1]]))
                    .collect::<Vec<_>>(),
                _ => Vec::new(),
            }
        })
        .collect();
    let mut count = 0;
    for (i, (a, p)) in segments.iter().enumerate() {
        for (b, q) in &segments[i + 1..] {
            if a != b && properly_intersect(*p, *q) {
                count += 1;
            }
        }
    }
    count
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricsOptions {
    pub dt: f64,
    pub occlusion_threshold: f64,
}

impl Default for MetricsOptions {
    fn default() -> Self {
        Self {
            dt: DEFAULT_DT,
            occlusion_threshold: DEFAULT_OCCLUSION_THRESHOLD,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TransitionReport {
    pub variant_name: String,
    pub total_duration: f64,
    pub total_travel: f64,
    pub max_simultaneous_moving: usize,
    pub occlusion_events: usize,
    pub max_crossings: usize,
    pub per_element_travel: BTreeMap<String, f64>,
    pub note: String,
}

/// Measures a compiled transition; occlusions and crossings are taken over
/// the given rendered frames.
pub fn build_report(tr: &Transition, frames: &[Frame], options: &MetricsOptions) -> Result<TransitionReport> {
    let travel = total_travel(&tr.timeline, &tr.mapping, &tr.spec, options.dt)?;
    Ok(TransitionReport {
        variant_name: tr.spec.variant_name.clone(),
        total_duration: tr.timeline.total_duration,
        total_travel: travel.total,
        max_simultaneous_moving: max_simultaneous_moving(&tr.timeline, options.dt)?,
        occlusion_events: occlusion_events(frames, options.occlusion_threshold)?,
        max_crossings: frames.iter().map(crossings).max().unwrap_or(0),
        per_element_travel: tr
            .mapping
            .pairs
            .iter()
            .zip(travel.per_element)
            .map(|(p, d)| (p.node_id.clone(), d))
            .collect(),
        note: PROXY_NOTE.to_string(),
    })
}

impl TransitionReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let rows = [
            ("variant", self.variant_name.clone()),
            ("total duration (s)", format!("{:.3}", self.total_duration)),
            ("total travel (px)", format!("{:.1}", self.total_travel)),
            ("max simultaneous moving", self.max_simultaneous_moving.to_string()),
            ("occlusion events", self.occlusion_events.to_string()),
            ("max crossings", self.max_crossings.to_string()),
        ];
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            let _ = writeln!(out, "{k:<width$}  {v}");
        }
        let _ = writeln!(out, "\nnote: {}", self.note);
        out
    }
}
