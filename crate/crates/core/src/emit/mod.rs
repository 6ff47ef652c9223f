//! Frames sampled from a compiled transition, serialized as a keyframe
//! document and as SVG.

mod frame;
mod keyframes;
mod svg;

pub use frame::{render_frame, render_nl_scene, render_pc_scene, Frame, Geometry, Primitive, PrimitiveKind};
pub use keyframes::{emit_keyframes, fmt3, KeyframeDocument, KEYFRAME_SCHEMA_VERSION};
pub use svg::emit_svg;
