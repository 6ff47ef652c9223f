use serde::{Deserialize, Serialize};

use super::easing::{ease, EasingKind};
use super::spec::{Direction, SortKey, StaggerConfig, StaggerScope, Staging, TransitionSpec};
use crate::data::MultivariateGraph;
use crate::error::{Error, Result};
use crate::transition::{ChangeKind, ElementMapping, StageTimes};

/// Half-open interval `[start, end)` in seconds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Window {
    pub start: f64,
    pub end: f64,
}

impl Window {
    pub const fn new(start: f64, end: f64) -> Self {
        Self { start, end }
    }

    pub fn len(&self) -> f64 {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end <= self.start
    }

    fn mirrored(self, total: f64) -> Self {
        Self::new(total - self.end, total - self.start)
    }

    /// Un-eased progress in `[0, 1]`. A zero-length window switches at its
    /// start; `inclusive` decides whether the instant itself counts as done.
    fn progress(&self, t: f64, inclusive: bool) -> f64 {
        if self.is_empty() {
            let done = if inclusive { t >= self.start } else { t > self.start };
            return if done { 1.0 } else { 0.0 };
        }
        ((t - self.start) / self.len()).clamp(0.0, 1.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Phases {
    pub alignment: Window,
    pub transformation: Window,
    pub enrichment: Window,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ElementTrack {
    pub node_id: String,
    /// Stagger delay applied to this element.
    pub delay: f64,
    pub shape: Window,
    pub pos: Window,
    pub size: Window,
}

impl ElementTrack {
    pub fn window(&self, kind: ChangeKind) -> Window {
        match kind {
            ChangeKind::Shape => self.shape,
            ChangeKind::Size => self.size,
            ChangeKind::Pos => self.pos,
        }
    }

    fn window_mut(&mut self, kind: ChangeKind) -> &mut Window {
        match kind {
            ChangeKind::Shape => &mut self.shape,
            ChangeKind::Size => &mut self.size,
            ChangeKind::Pos => &mut self.pos,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Timeline {
    pub direction: Direction,
    pub phases: Phases,
    /// One track per element, in mapping order.
    pub tracks: Vec<ElementTrack>,
    pub link_fade_window: Window,
    pub axis_fade_window: Window,
    pub label_fade_window: Window,
    pub total_duration: f64,
    pub easing_motion: EasingKind,
    pub easing_opacity: EasingKind,
}

/// `rank · perNodeDelay + clusterRank · perClusterDelay`.
pub fn stagger_delay(element_rank: usize, cluster_rank: usize, cfg: &StaggerConfig) -> f64 {
    element_rank as f64 * cfg.per_node_delay + cluster_rank as f64 * cfg.per_cluster_delay
}

/// Order in which elements start, as indices into `mapping.pairs`. Ties
/// always fall back to ascending node id.
pub fn stagger_order(graph: &MultivariateGraph, key: &SortKey, mapping: &ElementMapping) -> Result<Vec<usize>> {
    check_alignment(graph, mapping)?;
    let ids: Vec<&str> = mapping.pairs.iter().map(|p| p.node_id.as_str()).collect();
    let by_id = |a: &usize, b: &usize| ids[*a].cmp(ids[*b]);
    let mut order: Vec<usize> = (0..mapping.pairs.len()).collect();
    match key {
        SortKey::AttributeValue { axis, descending } => {
            let col = graph.attributes.index_of(axis).ok_or_else(|| {
                Error::argument(
                    "stagger.sortKey.attributeValue.axis",
                    format!("unknown attribute \"{axis}\""),
                )
            })?;
            let v: Vec<f64> = graph.attributes.column(col).collect();
            order.sort_by(|a, b| {
                let c = v[*a].total_cmp(&v[*b]);
                let c = if *descending { c.reverse() } else { c };
                c.then_with(|| by_id(a, b))
            });
        }
        SortKey::SpatialDistance => {
            let d: Vec<f64> = mapping
                .pairs
                .iter()
                .map(|p| p.dot.center.distance(p.line_midpoint()))
                .collect();
            order.sort_by(|a, b| d[*a].total_cmp(&d[*b]).then_with(|| by_id(a, b)));
        }
        SortKey::ClusterThenId => {
            let c: Vec<usize> = graph.nodes.iter().map(|n| n.cluster_id).collect();
            order.sort_by(|a, b| c[*a].cmp(&c[*b]).then_with(|| by_id(a, b)));
        }
    }
    Ok(order)
}

fn check_alignment(graph: &MultivariateGraph, mapping: &ElementMapping) -> Result<()> {
    let aligned = graph.nodes.len() == mapping.pairs.len()
        && graph.nodes.iter().zip(&mapping.pairs).all(|(n, p)| n.id == p.node_id);
    if aligned {
        Ok(())
    } else {
        Err(Error::Consistency(
            "mapping does not follow the graph's node order".into(),
        ))
    }
}

/// Per-element stagger delays, indexed like `mapping.pairs`.
fn delays(spec: &TransitionSpec, graph: &MultivariateGraph, mapping: &ElementMapping) -> Result<Vec<f64>> {
    let n = mapping.pairs.len();
    let Some(cfg) = &spec.stagger else {
        return Ok(vec![0.0; n]);
    };
    let order = stagger_order(graph, &cfg.sort_key, mapping)?;
    let mut cluster_rank: Vec<Option<usize>> = vec![None; graph.cluster_count.max(1)];
    let mut next_cluster = 0;
    let mut out = vec![0.0; n];
    for (rank, &i) in order.iter().enumerate() {
        let cluster = graph.nodes[i].cluster_id;
        let cr = *cluster_rank[cluster].get_or_insert_with(|| {
            next_cluster += 1;
            next_cluster - 1
        });
        out[i] = stagger_delay(rank, cr, cfg);
    }
    Ok(out)
}

/// Compiles the spec into absolute windows.
///
/// Alignment occupies `[0, A)`; links fade out and axes fade in over it.
/// Each element's change windows start at `A` plus its stagger delay:
/// simultaneous staging gives three coincident windows of one stage
/// duration, a staged order gives consecutive windows. The transformation
/// phase ends with the last element window; enrichment follows. A PC→NL
/// spec compiles to the exact time mirror of its NL→PC counterpart.
pub fn build_timeline(spec: &TransitionSpec, mapping: &ElementMapping, graph: &MultivariateGraph) -> Result<Timeline> {
    spec.validate()?;
    let delay = delays(spec, graph, mapping)?;
    let max_delay = delay.iter().copied().fold(0.0, f64::max);
    let a = spec.alignment_duration;
    let d = spec.stage_duration;

    let staging = spec.forward_staging();
    let slots: Vec<(ChangeKind, usize)> = match staging {
        Staging::Simultaneous => ChangeKind::ALL.iter().map(|&k| (k, 0)).collect(),
        Staging::Sequence(order) => order.iter().enumerate().map(|(i, &k)| (k, i)).collect(),
    };
    let per_stage = matches!(
        (&spec.stagger, staging),
        (
            Some(StaggerConfig {
                scope: StaggerScope::PerStage,
                ..
            }),
            Staging::Sequence(_)
        )
    );
    let stage_count = match staging {
        Staging::Simultaneous => 1,
        Staging::Sequence(_) => 3,
    };

    let tracks: Vec<ElementTrack> = mapping
        .pairs
        .iter()
        .zip(&delay)
        .map(|(pair, &delay)| {
            let mut track = ElementTrack {
                node_id: pair.node_id.clone(),
                delay,
                shape: Window::new(a, a),
                pos: Window::new(a, a),
                size: Window::new(a, a),
            };
            // staged windows chain end to start so they never overlap
            let mut next = a + delay;
            for &(kind, slot) in &slots {
                let start = if per_stage {
                    next.max(a + slot as f64 * (d + max_delay) + delay)
                } else if slot == 0 {
                    a + delay
                } else {
                    next
                };
                *track.window_mut(kind) = Window::new(start, start + d);
                next = start + d;
            }
            track
        })
        .collect();

    let nominal_end = a + stage_count as f64 * d;
    let transform_end = tracks
        .iter()
        .flat_map(|t| ChangeKind::ALL.map(|k| t.window(k).end))
        .fold(nominal_end, f64::max);
    let total = transform_end + spec.enrichment_duration;
    let alignment = Window::new(0.0, a);
    let phases = Phases {
        alignment,
        transformation: Window::new(a, transform_end),
        enrichment: Window::new(transform_end, total),
    };

    let mut timeline = Timeline {
        direction: Direction::NlToPc,
        phases,
        tracks,
        link_fade_window: alignment,
        axis_fade_window: alignment,
        label_fade_window: phases.enrichment,
        total_duration: total,
        easing_motion: spec.easing_motion,
        easing_opacity: spec.easing_opacity,
    };
    if spec.direction == Direction::PcToNl {
        timeline = timeline.mirrored();
    }
    Ok(timeline)
}

impl Timeline {
    fn mirrored(mut self) -> Self {
        let t = self.total_duration;
        self.direction = Direction::PcToNl;
        self.phases = Phases {
            alignment: self.phases.alignment.mirrored(t),
            transformation: self.phases.transformation.mirrored(t),
            enrichment: self.phases.enrichment.mirrored(t),
        };
        for track in &mut self.tracks {
            for k in ChangeKind::ALL {
                let w = track.window_mut(k);
                *w = w.mirrored(t);
            }
        }
        self.link_fade_window = self.link_fade_window.mirrored(t);
        self.axis_fade_window = self.axis_fade_window.mirrored(t);
        self.label_fade_window = self.label_fade_window.mirrored(t);
        self
    }

    /// Checks the structural invariants; returns a description of the first
    /// one that fails.
    pub fn check_invariants(&self) -> Result<(), String> {
        let p = &self.phases;
        let ordered = match self.direction {
            Direction::NlToPc => [p.alignment, p.transformation, p.enrichment],
            Direction::PcToNl => [p.enrichment, p.transformation, p.alignment],
        };
        if ordered[0].start != 0.0 {
            return Err("first phase does not start at 0".into());
        }
        for w in ordered.windows(2) {
            if w[0].end != w[1].start {
                return Err(format!("phases not contiguous at {}", w[0].end));
            }
        }
        if ordered[2].end != self.total_duration {
            return Err("last phase does not end at totalDuration".into());
        }
        let tr = p.transformation;
        for track in &self.tracks {
            for k in ChangeKind::ALL {
                let w = track.window(k);
                if w.start < tr.start - 1e-12 || w.end > tr.end + 1e-12 {
                    return Err(format!("{} {k:?} window outside transformation", track.node_id));
                }
            }
        }
        Ok(())
    }
}

/// Timeline state at one instant.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub t: f64,
    /// Eased progress of each element in the timeline's own direction.
    pub stage_times: Vec<StageTimes>,
    pub link_opacity: f64,
    pub axis_opacity: f64,
    pub label_opacity: f64,
    /// Set when the requested time lay outside `[0, totalDuration]`.
    pub clamped: bool,
}

impl Sample {
    /// Stage times expressed as NL→PC progress, whatever the direction.
    pub fn forward_stage_times(&self, direction: Direction) -> Vec<StageTimes> {
        match direction {
            Direction::NlToPc => self.stage_times.clone(),
            Direction::PcToNl => self.stage_times.iter().map(StageTimes::complement).collect(),
        }
    }
}

/// Evaluates the timeline at `t` seconds (clamped into range).
///
/// At the instant of a zero-length window the scene shows the PC side:
/// NL→PC changes count as done, PC→NL changes as not yet started.
pub fn sample(timeline: &Timeline, t: f64) -> Sample {
    let clamped_t = if t.is_nan() {
        0.0
    } else {
        t.clamp(0.0, timeline.total_duration)
    };
    let clamped = clamped_t != t;
    let t = clamped_t;
    let forward = timeline.direction == Direction::NlToPc;
    let motion = |w: Window| ease(w.progress(t, forward), timeline.easing_motion);
    let fade = |w: Window| ease(w.progress(t, forward), timeline.easing_opacity);

    let stage_times = timeline
        .tracks
        .iter()
        .map(|tr| StageTimes::new(motion(tr.shape), motion(tr.pos), motion(tr.size)))
        .collect();
    let (link, axis, label) = (
        fade(timeline.link_fade_window),
        fade(timeline.axis_fade_window),
        fade(timeline.label_fade_window),
    );
    let (link_opacity, axis_opacity, label_opacity) = if forward {
        (1.0 - link, axis, label)
    } else {
        (link, 1.0 - axis, 1.0 - label)
    };
    Sample {
        t,
        stage_times,
        link_opacity,
        axis_opacity,
        label_opacity,
        clamped,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::{les_miserables, Node};
    use crate::geometry::Point;
    use crate::layout::DotGlyph;
    use crate::timeline::{v_adv, v_basic};
    use crate::transition::ElementPair;

    /// Mapping with one pair per graph node; dot `i` sits at `(i, 0)` and
    /// every line midpoint at the origin.
    fn mapping_for(graph: &MultivariateGraph) -> ElementMapping {
        let pairs = graph
            .nodes
            .iter()
            .enumerate()
            .map(|(i, n)| ElementPair {
                node_id: n.id.clone(),
                dot: DotGlyph {
                    node_id: n.id.clone(),
                    center: Point::new(i as f64, 0.0),
                    radius: 6.0,
                    color_index: n.cluster_id,
                },
                line: [Point::new(-10.0, 0.0), Point::new(10.0, 0.0)],
                line_width: 1.5,
                color_index: n.cluster_id,
            })
            .collect();
        ElementMapping {
            pairs,
            fading_links: vec![],
            appearing_axes: vec![],
        }
    }

    fn graph(nodes: &[(&str, usize)], clusters: usize) -> MultivariateGraph {
        MultivariateGraph {
            nodes: nodes.iter().map(|&(id, c)| Node::new(id, c)).collect(),
            cluster_count: clusters,
            ..Default::default()
        }
    }

    fn compile(spec: &TransitionSpec, g: &MultivariateGraph) -> Timeline {
        build_timeline(spec, &mapping_for(g), g).unwrap()
    }

    #[test]
    fn v_basic_phases() {
        let g = les_miserables();
        let tl = compile(&v_basic(), &g);
        assert_eq!(tl.phases.alignment, Window::new(0.0, 1.0));
        assert_eq!(tl.phases.transformation, Window::new(1.0, 3.0));
        assert_eq!(tl.total_duration, 3.0);
        for tr in &tl.tracks {
            for k in ChangeKind::ALL {
                assert_eq!(tr.window(k), Window::new(1.0, 3.0));
            }
        }
        tl.check_invariants().unwrap();
    }

    #[test]
    fn v_adv_without_stagger_stage_windows() {
        let g = les_miserables();
        let mut spec = v_adv();
        spec.stagger = None;
        let tl = compile(&spec, &g);
        assert_eq!(tl.total_duration, 7.0);
        for tr in &tl.tracks {
            assert_eq!(tr.shape, Window::new(1.0, 3.0));
            assert_eq!(tr.pos, Window::new(3.0, 5.0));
            assert_eq!(tr.size, Window::new(5.0, 7.0));
        }
    }

    /// Independent count: walk nodes sorted by (cluster, id), numbering
    /// clusters in the order they show up.
    fn loop_oracle_max_delay(g: &MultivariateGraph, per_node: f64, per_cluster: f64) -> f64 {
        let mut keyed: Vec<(usize, &str)> = g.nodes.iter().map(|n| (n.cluster_id, n.id.as_str())).collect();
        keyed.sort();
        let mut seen = Vec::new();
        let mut max: f64 = 0.0;
        for (rank, (cluster, _)) in keyed.iter().enumerate() {
            if !seen.contains(cluster) {
                seen.push(*cluster);
            }
            let cluster_rank = seen.iter().position(|c| c == cluster).unwrap();
            max = max.max(rank as f64 * per_node + cluster_rank as f64 * per_cluster);
        }
        max
    }

    #[test]
    fn les_miserables_stagger_tail() {
        let g = les_miserables();
        let tl = compile(&v_adv(), &g);
        let max_delay = tl.tracks.iter().map(|t| t.delay).fold(0.0, f64::max);
        let oracle = loop_oracle_max_delay(&g, 0.02, 0.4);
        assert!((max_delay - oracle).abs() < 1e-9);
        assert!((max_delay - 5.52).abs() < 1e-9);
        assert!((tl.total_duration - 12.52).abs() < 1e-9);
        assert!((tl.total_duration - (7.0 + oracle)).abs() < 1e-9);
        tl.check_invariants().unwrap();
    }

    #[test]
    fn delay_formula() {
        let cfg = StaggerConfig::default();
        assert_eq!(stagger_delay(0, 0, &cfg), 0.0);
        assert!((stagger_delay(76, 10, &cfg) - 5.52).abs() < 1e-12);
        assert!((stagger_delay(3, 1, &cfg) - 0.46).abs() < 1e-12);
    }

    #[test]
    fn sort_orders() {
        let mut g = graph(&[("c", 1), ("a", 1), ("b", 0)], 2);
        let m = mapping_for(&g);
        assert_eq!(stagger_order(&g, &SortKey::ClusterThenId, &m).unwrap(), vec![2, 1, 0]);
        // dot i sits i px from the common midpoint
        assert_eq!(stagger_order(&g, &SortKey::SpatialDistance, &m).unwrap(), vec![0, 1, 2]);

        g.attributes.names = vec!["x".into(), "y".into()];
        g.attributes.values = vec![vec![5.0, 0.0], vec![1.0, 0.0], vec![5.0, 0.0]];
        let asc = SortKey::AttributeValue {
            axis: "x".into(),
            descending: false,
        };
        assert_eq!(stagger_order(&g, &asc, &m).unwrap(), vec![1, 2, 0]);
        let desc = SortKey::AttributeValue {
            axis: "x".into(),
            descending: true,
        };
        assert_eq!(stagger_order(&g, &desc, &m).unwrap(), vec![2, 0, 1]);
        let missing = SortKey::AttributeValue {
            axis: "nope".into(),
            descending: false,
        };
        assert!(matches!(stagger_order(&g, &missing, &m), Err(Error::Argument { .. })));
    }

    #[test]
    fn mapping_out_of_graph_order_is_rejected() {
        let g = graph(&[("a", 0), ("b", 0)], 1);
        let mut m = mapping_for(&g);
        m.pairs.swap(0, 1);
        assert!(matches!(build_timeline(&v_adv(), &m, &g), Err(Error::Consistency(_))));
    }

    #[test]
    fn per_stage_scope_keeps_stages_apart() {
        let g = graph(&[("a", 0), ("b", 0), ("c", 1)], 2);
        let mut spec = v_adv();
        let cfg = spec.stagger.as_mut().unwrap();
        cfg.scope = StaggerScope::PerStage;
        let tl = compile(&spec, &g);
        let max_delay = 0.02 * 2.0 + 0.4;
        let last = &tl.tracks[2];
        assert!((last.delay - max_delay).abs() < 1e-12);
        // the second stage of the first element waits for the whole first stage
        let first = &tl.tracks[0];
        assert!(first.pos.start >= last.shape.end - 1e-12);
        assert!((tl.total_duration - (1.0 + 3.0 * (2.0 + max_delay))).abs() < 1e-12);
        tl.check_invariants().unwrap();
    }

    #[test]
    fn sampling_v_basic() {
        let g = graph(&[("a", 0)], 1);
        let tl = compile(&v_basic(), &g);
        let s = sample(&tl, 1.5);
        assert_eq!(s.link_opacity, 0.0);
        assert_eq!(s.axis_opacity, 1.0);
        assert_eq!(s.stage_times[0], StageTimes::all(0.25));
        let s = sample(&tl, 0.5);
        assert_eq!((s.link_opacity, s.axis_opacity), (0.5, 0.5));
        assert_eq!(s.stage_times[0], StageTimes::START);
        let s = sample(&tl, 3.0);
        assert_eq!(s.stage_times[0], StageTimes::END);
        assert_eq!(s.label_opacity, 1.0);
    }

    #[test]
    fn out_of_range_times_clamp() {
        let g = graph(&[("a", 0)], 1);
        let tl = compile(&v_basic(), &g);
        let before = sample(&tl, -1.0);
        assert!(before.clamped);
        assert_eq!(before.t, 0.0);
        let after = sample(&tl, 99.0);
        assert!(after.clamped && after.t == 3.0);
        assert!(!sample(&tl, 2.0).clamped);
    }

    #[test]
    fn stage_times_never_decrease() {
        let g = les_miserables();
        for spec in [v_basic(), v_adv()] {
            let tl = compile(&spec, &g);
            let mut prev = sample(&tl, 0.0);
            let steps = 400;
            for i in 1..=steps {
                let s = sample(&tl, tl.total_duration * i as f64 / steps as f64);
                for (a, b) in prev.stage_times.iter().zip(&s.stage_times) {
                    assert!(b.shape >= a.shape && b.pos >= a.pos && b.size >= a.size);
                }
                prev = s;
            }
        }
    }

    #[test]
    fn reversed_timeline_mirrors_forward() {
        let g = graph(&[("a", 0), ("b", 1), ("c", 1)], 2);
        let spec = v_adv();
        let fwd = compile(&spec, &g);
        let back = compile(&spec.reversed(), &g);
        assert_eq!(back.direction, Direction::PcToNl);
        assert_eq!(back.total_duration, fwd.total_duration);
        back.check_invariants().unwrap();
        let total = fwd.total_duration;
        for i in 0..=50 {
            let t = total * i as f64 / 50.0;
            let f = sample(&fwd, t);
            let b = sample(&back, total - t);
            let bf = b.forward_stage_times(Direction::PcToNl);
            for (x, y) in f.stage_times.iter().zip(&bf) {
                assert!((x.shape - y.shape).abs() < 1e-12);
                assert!((x.pos - y.pos).abs() < 1e-12);
                assert!((x.size - y.size).abs() < 1e-12);
            }
            assert!((f.link_opacity - b.link_opacity).abs() < 1e-12);
            assert!((f.axis_opacity - b.axis_opacity).abs() < 1e-12);
        }
    }

    #[test]
    fn zero_length_stages_show_pc_side_at_their_instant() {
        let g = graph(&[("a", 0)], 1);
        let mut spec = v_basic();
        spec.stage_duration = 0.0;
        let fwd = compile(&spec, &g);
        assert_eq!(sample(&fwd, 1.0).stage_times[0], StageTimes::END);
        let back = compile(&spec.reversed(), &g);
        assert_eq!(back.total_duration, 1.0);
        let s = sample(&back, 0.0);
        assert_eq!(s.forward_stage_times(Direction::PcToNl)[0], StageTimes::END);
    }

    #[test]
    fn listed_delay_and_order_examples() {
        let cfg = StaggerConfig::default();
        assert!((stagger_delay(1, 0, &cfg) - 0.02).abs() < 1e-12);
        assert!((stagger_delay(5, 2, &cfg) - 0.9).abs() < 1e-12);

        let g = graph(&[("b", 1), ("z", 0), ("a", 0)], 2);
        let m = mapping_for(&g);
        let ids = |order: Vec<usize>| order.into_iter().map(|i| g.nodes[i].id.clone()).collect::<Vec<_>>();
        assert_eq!(
            ids(stagger_order(&g, &SortKey::ClusterThenId, &m).unwrap()),
            ["a", "z", "b"]
        );

        let mut m = mapping_for(&g);
        m.pairs[2].dot.center = m.pairs[2].line_midpoint();
        m.pairs[0].dot.center = Point::new(50.0, 0.0);
        assert_eq!(stagger_order(&g, &SortKey::SpatialDistance, &m).unwrap()[0], 2);
    }

    #[test]
    fn v_basic_halfway_through_transformation() {
        let g = graph(&[("a", 0)], 1);
        let tl = compile(&v_basic(), &g);
        assert_eq!(sample(&tl, 2.0).stage_times[0], StageTimes::all(0.5));
        let start = sample(&tl, 0.0);
        assert_eq!((start.link_opacity, start.axis_opacity), (1.0, 0.0));
    }

    #[test]
    fn stagger_shifts_starts_only() {
        let g = les_miserables();
        for staging in crate::timeline::Staging::ALL {
            let mut spec = v_adv();
            spec.staging = staging;
            let tl = compile(&spec, &g);
            for tr in &tl.tracks {
                let w: Vec<Window> = ChangeKind::ALL.iter().map(|&k| tr.window(k)).collect();
                assert!(w.iter().all(|w| (w.len() - 2.0).abs() < 1e-12));
                match staging {
                    Staging::Simultaneous => assert!(w.iter().all(|x| *x == w[0])),
                    Staging::Sequence(order) => {
                        for pair in order.windows(2) {
                            assert!(tr.window(pair[0]).end <= tr.window(pair[1]).start);
                        }
                    }
                }
            }
        }
    }
}
