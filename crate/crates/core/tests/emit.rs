use nlpc_core::emit::{emit_keyframes, emit_svg, render_frame, render_nl_scene, render_pc_scene, KeyframeDocument};
use nlpc_core::transition::interpolate_geometric;
use nlpc_core::{
    generate_attributes, les_miserables, v_adv, v_basic, LayoutOptions, PatternKind, PrimitiveKind, ShapeStyle,
    Strategy, Transition, TransitionSpec, Viewport,
};

fn compile(spec: TransitionSpec) -> Transition {
    let g = les_miserables();
    let attrs = generate_attributes(&g, 2, PatternKind::NegativeCorrelation, 42).unwrap();
    Transition::compile(
        g.with_attributes(attrs),
        spec,
        Viewport::default(),
        &LayoutOptions::default(),
    )
    .unwrap()
}

#[test]
fn first_and_last_frames_render_like_the_endpoint_scenes() {
    for strategy in Strategy::ALL {
        for style in [ShapeStyle::Geometric, ShapeStyle::OrientedLine, ShapeStyle::bent()] {
            let mut spec = v_adv();
            spec.strategy = strategy;
            spec.shape_style = style;
            let tr = compile(spec);
            let t = tr.total_duration();
            assert_eq!(
                emit_svg(&render_frame(&tr, 0.0), &tr.viewport),
                emit_svg(&render_nl_scene(&tr.nl), &tr.viewport),
                "{strategy:?} {style:?} first"
            );
            assert_eq!(
                emit_svg(&render_frame(&tr, t), &tr.viewport),
                emit_svg(&render_pc_scene(&tr.pc, t), &tr.viewport),
                "{strategy:?} {style:?} last"
            );
        }
    }
}

#[test]
fn v_basic_at_50_fps_has_151_frames() {
    let tr = compile(v_basic());
    let doc = emit_keyframes(&tr, 50.0).unwrap();
    assert_eq!(doc.frames.len(), 151);
    assert_eq!(doc.frames[0].timestamp, 0.0);
    assert_eq!(doc.frames[150].timestamp, 3.0);
    assert!(emit_keyframes(&tr, 0.0).is_err());
    assert!(emit_keyframes(&tr, f64::NAN).is_err());
}

#[test]
fn keyframe_json_uses_three_decimals_and_round_trips() {
    let tr = compile(v_basic());
    let doc = emit_keyframes(&tr, 5.0).unwrap();
    let json = doc.to_json();
    assert!(json.starts_with(r#"{"schemaVersion":"1","spec":{"#));
    assert!(json.contains(r#""fps":5.000"#));
    assert!(json.contains(r#""totalDuration":3.000"#));
    let back = KeyframeDocument::from_json(&json).unwrap();
    assert_eq!(back.spec, doc.spec);
    assert_eq!(back.frames.len(), doc.frames.len());
    // a second pass through the text form is byte-stable
    assert_eq!(back.to_json(), json);
    for (a, b) in back.frames.iter().zip(&doc.frames) {
        assert_eq!(a.primitives.len(), b.primitives.len());
        for (p, q) in a.primitives.iter().zip(&b.primitives) {
            assert_eq!((p.kind, &p.element_id), (q.kind, &q.element_id));
            for (u, v) in p.vertices().iter().zip(q.vertices()) {
                assert!((u.x - v.x).abs() <= 5e-4 && (u.y - v.y).abs() <= 5e-4);
            }
        }
    }
}

#[test]
fn keyframe_document_errors_name_the_field() {
    let err = KeyframeDocument::from_json(r#"{"schemaVersion":"1","spec":{},"viewport":1}"#).unwrap_err();
    assert_eq!(err.path(), Some("spec".to_string()));
    let tr = compile(v_basic());
    let json =
        emit_keyframes(&tr, 1.0)
            .unwrap()
            .to_json()
            .replacen(r#""schemaVersion":"1""#, r#""schemaVersion":"9""#, 1);
    assert_eq!(
        KeyframeDocument::from_json(&json).unwrap_err().path(),
        Some("schemaVersion".to_string())
    );
}

#[test]
fn frames_layer_links_under_glyphs_under_labels() {
    let tr = compile(v_basic());
    for t in [0.0, 0.5, 1.5, 3.0] {
        let f = render_frame(&tr, t);
        let layers: Vec<u8> = f.primitives.iter().map(|p| p.kind.layer()).collect();
        assert!(layers.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(f.glyphs().count(), 77);
    }
    let mid = render_frame(&tr, 0.5);
    assert_eq!(mid.count(PrimitiveKind::Link), 254);
    assert_eq!(mid.count(PrimitiveKind::Axis), 2);
    assert_eq!(mid.count(PrimitiveKind::Label), 0);
    let end = render_frame(&tr, 3.0);
    assert_eq!(end.count(PrimitiveKind::Link), 0);
    assert_eq!(end.count(PrimitiveKind::Label), 6);
}

#[test]
fn unconnected_strategy_shows_dot_and_growing_line() {
    let mut spec = v_basic();
    spec.strategy = Strategy::SimultaneousUnconnected;
    let tr = compile(spec);
    let f = render_frame(&tr, 2.0);
    assert_eq!(f.count(PrimitiveKind::Dot), 77);
    assert_eq!(f.count(PrimitiveKind::Segment), 77);
    assert!(f.primitives.iter().any(|p| p.element_id.ends_with("#aux")));
}

#[test]
fn les_miserables_endpoint_counts() {
    let tr = compile(v_basic());
    let first = render_frame(&tr, 0.0);
    assert_eq!(
        (
            first.count(PrimitiveKind::Dot),
            first.count(PrimitiveKind::Link),
            first.count(PrimitiveKind::Axis)
        ),
        (77, 254, 0)
    );
    let last = render_frame(&tr, tr.total_duration());
    assert_eq!(last.count(PrimitiveKind::Polyline), 77);
    assert!(last.glyphs().all(|p| p.vertices().len() == 2));
    assert_eq!(
        (last.count(PrimitiveKind::Axis), last.count(PrimitiveKind::Link)),
        (2, 0)
    );
}

#[test]
fn v_basic_midway_is_plain_geometric_interpolation() {
    let tr = compile(v_basic());
    let f = render_frame(&tr, 1.5);
    assert_eq!(f.count(PrimitiveKind::Link), 0);
    for pair in &tr.mapping.pairs {
        let want = interpolate_geometric(pair, 0.25);
        let got = f.glyphs().find(|p| p.element_id == pair.node_id).unwrap();
        for (u, v) in got.vertices().iter().zip(&want.vertices) {
            assert!((u.x - v.x).abs() < 1e-9 && (u.y - v.y).abs() < 1e-9);
        }
        assert!((got.stroke_width - want.stroke_width).abs() < 1e-9);
    }
}

#[test]
fn one_glyph_per_node_in_every_frame() {
    for strategy in Strategy::ALL {
        let mut spec = v_adv();
        spec.strategy = strategy;
        let tr = compile(spec);
        let doc = emit_keyframes(&tr, 4.0).unwrap();
        for f in &doc.frames {
            let own = f.glyphs().filter(|p| !p.element_id.contains('#')).count();
            let aux = f.glyphs().filter(|p| p.element_id.ends_with("#aux")).count();
            assert_eq!(own, 77, "{strategy:?} t={}", f.timestamp);
            assert!(aux == 0 || strategy == Strategy::SimultaneousUnconnected);
        }
        assert!(doc.frames.windows(2).all(|w| w[0].timestamp < w[1].timestamp));
    }
}

#[test]
fn keyframe_serialization_is_repeatable() {
    let tr = compile(v_adv());
    let a = emit_keyframes(&tr, 7.0).unwrap();
    assert_eq!(*a.frames.last().map(|f| &f.timestamp).unwrap(), tr.total_duration());
    assert_eq!(a.to_json(), emit_keyframes(&tr, 7.0).unwrap().to_json());
}
