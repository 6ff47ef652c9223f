//! Compiles a transition spec into absolute-time windows (alignment,
//! transformation with staging and staggering, enrichment) and samples it.

mod compile;
mod easing;
mod spec;

pub use compile::{
    build_timeline, sample, stagger_delay, stagger_order, ElementTrack, Phases, Sample, Timeline, Window,
};
pub use easing::{ease, EasingKind};
pub use spec::{
    preset, v_adv, v_basic, Direction, SortKey, StaggerConfig, StaggerScope, Staging, TransitionSpec,
    SPEC_SCHEMA_VERSION, STAGING_ORDERS,
};
