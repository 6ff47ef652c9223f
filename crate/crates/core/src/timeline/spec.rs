//! Transition specification, its JSON document (`schemaVersion` "1") and
//! the two presets.

use serde::{Deserialize, Deserializer, Serialize};

use super::easing::EasingKind;
use crate::error::{Error, Result};
use crate::transition::{ChangeKind, PathStrategy, ShapeStyle, Strategy};

pub const SPEC_SCHEMA_VERSION: &str = "1";

/// Staging orders accepted for the NL→PC direction.
pub const STAGING_ORDERS: [[ChangeKind; 3]; 3] = [
    [ChangeKind::Pos, ChangeKind::Shape, ChangeKind::Size],
    [ChangeKind::Shape, ChangeKind::Size, ChangeKind::Pos],
    [ChangeKind::Shape, ChangeKind::Pos, ChangeKind::Size],
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Direction {
    #[default]
    NlToPc,
    PcToNl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "StagingRepr", into = "StagingRepr")]
pub enum Staging {
    Simultaneous,
    Sequence([ChangeKind; 3]),
}

impl Staging {
    /// Every staging option for the NL→PC direction.
    pub const ALL: [Staging; 4] = [
        Staging::Simultaneous,
        Staging::Sequence(STAGING_ORDERS[0]),
        Staging::Sequence(STAGING_ORDERS[1]),
        Staging::Sequence(STAGING_ORDERS[2]),
    ];

    pub fn reversed(self) -> Self {
        match self {
            Staging::Simultaneous => Staging::Simultaneous,
            Staging::Sequence([a, b, c]) => Staging::Sequence([c, b, a]),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum StagingRepr {
    Keyword(String),
    Order(Vec<ChangeKind>),
}

impl TryFrom<StagingRepr> for Staging {
    type Error = String;

    fn try_from(value: StagingRepr) -> Result<Self, String> {
        match value {
            StagingRepr::Keyword(k) if k == "simultaneous" => Ok(Staging::Simultaneous),
            StagingRepr::Keyword(k) => Err(format!("unknown staging \"{k}\"")),
            StagingRepr::Order(v) => {
                let order: [ChangeKind; 3] = v
                    .try_into()
                    .map_err(|v: Vec<ChangeKind>| format!("staging order has {} entries, expected 3", v.len()))?;
                if ChangeKind::ALL.iter().all(|k| order.contains(k)) {
                    Ok(Staging::Sequence(order))
                } else {
                    Err("staging order must be a permutation of shape, size, pos".into())
                }
            }
        }
    }
}

impl From<Staging> for StagingRepr {
    fn from(value: Staging) -> Self {
        match value {
            Staging::Simultaneous => StagingRepr::Keyword("simultaneous".into()),
            Staging::Sequence(order) => StagingRepr::Order(order.to_vec()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum SortKey {
    AttributeValue { axis: String, descending: bool },
    SpatialDistance,
    ClusterThenId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum StaggerScope {
    /// An element's whole staged block shifts by its delay.
    #[default]
    WholeTransformation,
    /// Each stage starts together for all elements, staggered within.
    PerStage,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct StaggerConfig {
    pub per_node_delay: f64,
    pub per_cluster_delay: f64,
    pub sort_key: SortKey,
    #[serde(default)]
    pub scope: StaggerScope,
}

impl Default for StaggerConfig {
    /// 0.02 s per node, 0.4 s per cluster.
    fn default() -> Self {
        Self {
            per_node_delay: 0.02,
            per_cluster_delay: 0.4,
            sort_key: SortKey::ClusterThenId,
            scope: StaggerScope::WholeTransformation,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TransitionSpec {
    pub variant_name: String,
    pub direction: Direction,
    pub strategy: Strategy,
    pub shape_style: ShapeStyle,
    pub path_strategy: PathStrategy,
    pub staging: Staging,
    pub alignment_duration: f64,
    pub stage_duration: f64,
    pub enrichment_duration: f64,
    pub stagger: Option<StaggerConfig>,
    pub easing_motion: EasingKind,
    pub easing_opacity: EasingKind,
}

/// All changes at once with plain geometric interpolation: 1 s alignment,
/// 2 s transformation, no enrichment animation.
pub fn v_basic() -> TransitionSpec {
    TransitionSpec {
        variant_name: "v_basic".into(),
        direction: Direction::NlToPc,
        strategy: Strategy::SimultaneousConnected,
        shape_style: ShapeStyle::Geometric,
        path_strategy: PathStrategy::ShortestPath,
        staging: Staging::Simultaneous,
        alignment_duration: 1.0,
        stage_duration: 2.0,
        enrichment_duration: 0.0,
        stagger: None,
        easing_motion: EasingKind::Linear,
        easing_opacity: EasingKind::Linear,
    }
}

/// Oriented lines staged shape → pos → size at 2 s per stage, staggered
/// 0.02 s per node and 0.4 s per cluster.
pub fn v_adv() -> TransitionSpec {
    TransitionSpec {
        variant_name: "v_adv".into(),
        direction: Direction::NlToPc,
        strategy: Strategy::SimultaneousConnected,
        shape_style: ShapeStyle::OrientedLine,
        path_strategy: PathStrategy::ShortestPath,
        staging: Staging::Sequence([ChangeKind::Shape, ChangeKind::Pos, ChangeKind::Size]),
        alignment_duration: 1.0,
        stage_duration: 2.0,
        enrichment_duration: 0.0,
        stagger: Some(StaggerConfig::default()),
        easing_motion: EasingKind::CubicInOut,
        easing_opacity: EasingKind::Linear,
    }
}

/// Looks a preset up by variant name.
pub fn preset(name: &str) -> Option<TransitionSpec> {
    match name {
        "v_basic" => Some(v_basic()),
        "v_adv" => Some(v_adv()),
        _ => None,
    }
}

impl TransitionSpec {
    /// The same transition played from the other end, with the staging
    /// order reversed.
    pub fn reversed(&self) -> Self {
        Self {
            direction: match self.direction {
                Direction::NlToPc => Direction::PcToNl,
                Direction::PcToNl => Direction::NlToPc,
            },
            staging: self.staging.reversed(),
            ..self.clone()
        }
    }

    /// Staging as seen in the NL→PC direction.
    pub fn forward_staging(&self) -> Staging {
        match self.direction {
            Direction::NlToPc => self.staging,
            Direction::PcToNl => self.staging.reversed(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let durations = [
            ("alignmentDuration", self.alignment_duration),
            ("stageDuration", self.stage_duration),
            ("enrichmentDuration", self.enrichment_duration),
        ];
        for (name, d) in durations {
            if !(d.is_finite() && d >= 0.0) {
                return Err(Error::argument(name, format!("{d} is not a non-negative duration")));
            }
        }
        if let Staging::Sequence(order) = self.forward_staging() {
            if !STAGING_ORDERS.contains(&order) {
                return Err(Error::argument(
                    "stagingOrder",
                    format!("{order:?} is not a supported order"),
                ));
            }
        }
        if let Some(st) = &self.stagger {
            for (name, d) in [
                ("stagger.perNodeDelay", st.per_node_delay),
                ("stagger.perClusterDelay", st.per_cluster_delay),
            ] {
                if !(d.is_finite() && d >= 0.0) {
                    return Err(Error::argument(name, format!("{d} is not a non-negative delay")));
                }
            }
        }
        self.shape_style.check()
    }

    /// Parses a spec document. Fields left out are taken from the preset
    /// named by `variantName` (or from `v_basic` for other names).
    pub fn from_json(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let doc: SpecDocument = serde_path_to_error::deserialize(de).map_err(|e| Error::Parse {
            path: e.path().to_string(),
            message: e.into_inner().to_string(),
        })?;
        if doc.schema_version != SPEC_SCHEMA_VERSION {
            return Err(Error::Parse {
                path: "schemaVersion".into(),
                message: format!("unsupported version \"{}\"", doc.schema_version),
            });
        }
        let mut spec = preset(&doc.variant_name).unwrap_or_else(v_basic);
        spec.variant_name = doc.variant_name;
        macro_rules! overlay {
            ($($field:ident),*) => { $( if let Some(v) = doc.$field { spec.$field = v; } )* };
        }
        overlay!(
            direction,
            strategy,
            shape_style,
            path_strategy,
            alignment_duration,
            stage_duration,
            enrichment_duration,
            stagger,
            easing_motion,
            easing_opacity
        );
        if let Some(staging) = doc.staging_order {
            spec.staging = staging;
        }
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(&SpecDocument::from(self)).expect("spec serializes");
        text.push('\n');
        text
    }
}

impl Serialize for TransitionSpec {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SpecDocument::from(self).serialize(serializer)
    }
}

fn explicit_null<'de, D, T>(de: D) -> Result<Option<Option<T>>, D::Error>
where
    D: Deserializer<'de>,
    T: Deserialize<'de>,
{
    Option::<T>::deserialize(de).map(Some)
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct SpecDocument {
    schema_version: String,
    variant_name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    direction: Option<Direction>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    strategy: Option<Strategy>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    shape_style: Option<ShapeStyle>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    path_strategy: Option<PathStrategy>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    staging_order: Option<Staging>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    alignment_duration: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    stage_duration: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    enrichment_duration: Option<f64>,
    /// `null` disables staggering; a missing field keeps the preset's.
    #[serde(default, deserialize_with = "explicit_null", skip_serializing_if = "Option::is_none")]
    stagger: Option<Option<StaggerConfig>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    easing_motion: Option<EasingKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    easing_opacity: Option<EasingKind>,
}

impl From<&TransitionSpec> for SpecDocument {
    fn from(s: &TransitionSpec) -> Self {
        Self {
            schema_version: SPEC_SCHEMA_VERSION.into(),
            variant_name: s.variant_name.clone(),
            direction: Some(s.direction),
            strategy: Some(s.strategy),
            shape_style: Some(s.shape_style),
            path_strategy: Some(s.path_strategy),
            staging_order: Some(s.staging),
            alignment_duration: Some(s.alignment_duration),
            stage_duration: Some(s.stage_duration),
            enrichment_duration: Some(s.enrichment_duration),
            stagger: Some(s.stagger.clone()),
            easing_motion: Some(s.easing_motion),
            easing_opacity: Some(s.easing_opacity),
        }
    }
}
