//! Keyframe document (`schemaVersion` "1").
//!
//! ```json
//! { "schemaVersion": "1", "spec": {...}, "viewport": {...},
//!   "palette": ["#4e79a7", ...], "fps": 50.000, "totalDuration": 3.000,
//!   "frames": [{ "t": 0.000, "primitives": [
//!       { "kind": "link", "elementId": "a--b",
//!         "geometry": {"points": [[x, y], [x, y]]},
//!         "strokeWidth": 1.000, "opacity": 1.000 },
//!       { "kind": "dot", "elementId": "a",
//!         "geometry": {"center": [x, y], "radius": 6.000},
//!         "strokeWidth": 0.000, "opacity": 1.000, "colorIndex": 3 } ]}]}
//! ```
//!
//! Kinds are `link`, `axis`, `dot`, `polyline`, `segment` and `label`
//! (`geometry: {"anchor": [x, y], "text": "..."}`); primitives are sorted
//! by layer (links, axes, glyphs, labels) then element id. Every real
//! number in frames is written with exactly three fractional digits.

use serde::{Deserialize, Serialize};

use super::frame::{render_frame, Frame};
use crate::error::{Error, Result};
use crate::layout::{Viewport, PALETTE};
use crate::pipeline::Transition;
use crate::timeline::TransitionSpec;

pub const KEYFRAME_SCHEMA_VERSION: &str = "1";

/// Three fractional digits, with negative zero printed as `0.000`.
pub fn fmt3(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

pub(crate) mod fixed {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use serde_json::value::RawValue;

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        assert!(v.is_finite(), "non-finite coordinate in frame");
        let raw = RawValue::from_string(super::fmt3(*v)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        f64::deserialize(d)
    }
}

pub(crate) mod fixed_point {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::geometry::Point;

    pub fn serialize<S: Serializer>(p: &Point, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeTuple;
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&Fixed(p.x))?;
        t.serialize_element(&Fixed(p.y))?;
        t.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Point, D::Error> {
        let [x, y] = <[f64; 2]>::deserialize(d)?;
        Ok(Point::new(x, y))
    }

    pub(crate) struct Fixed(pub f64);

    impl serde::Serialize for Fixed {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            super::fixed::serialize(&self.0, s)
        }
    }
}

pub(crate) mod fixed_points {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::fixed_point::Fixed;
    use crate::geometry::Point;

    pub fn serialize<S: Serializer>(points: &[Point], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(points.iter().map(|p| [Fixed(p.x), Fixed(p.y)]))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Point>, D::Error> {
        let raw = Vec::<[f64; 2]>::deserialize(d)?;
        Ok(raw.into_iter().map(|[x, y]| Point::new(x, y)).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct KeyframeDocument {
    pub schema_version: String,
    #[serde(with = "spec_value")]
    pub spec: TransitionSpec,
    pub viewport: Viewport,
    pub palette: Vec<String>,
    #[serde(with = "fixed")]
    pub fps: f64,
    #[serde(with = "fixed")]
    pub total_duration: f64,
    pub frames: Vec<Frame>,
}

mod spec_value {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::timeline::TransitionSpec;

    pub fn serialize<S: Serializer>(spec: &TransitionSpec, s: S) -> Result<S::Ok, S::Error> {
        spec.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<TransitionSpec, D::Error> {
        let value = serde_json::Value::deserialize(d)?;
        TransitionSpec::from_json(&value.to_string()).map_err(serde::de::Error::custom)
    }
}

impl KeyframeDocument {
    /// Compact, byte-stable JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("keyframe document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let doc: Self = serde_path_to_error::deserialize(de).map_err(|e| Error::Parse {
            path: e.path().to_string(),
            message: e.into_inner().to_string(),
        })?;
        if doc.schema_version != KEYFRAME_SCHEMA_VERSION {
            return Err(Error::Parse {
                path: "schemaVersion".into(),
                message: format!("unsupported version \"{}\"", doc.schema_version),
            });
        }
        if doc.frames.is_empty() {
            return Err(Error::Parse {
                path: "frames".into(),
                message: "no frames".into(),
            });
        }
        Ok(doc)
    }
}

/// Frame times for a duration at `fps`: `round(T·fps) + 1` uniform samples,
/// the last one pinned to `T`.
pub(crate) fn frame_times(total: f64, fps: f64) -> Vec<f64> {
    let count = (total * fps).round() as usize + 1;
    (0..count)
        .map(|i| if i + 1 == count { total } else { i as f64 / fps })
        .collect()
}

/// Samples the whole transition at `fps` frames per second.
pub fn emit_keyframes(tr: &Transition, fps: f64) -> Result<KeyframeDocument> {
    if !(fps.is_finite() && fps > 0.0) {
        return Err(Error::argument("fps", format!("{fps} is not a positive frame rate")));
    }
    let total = tr.total_duration();
    let frames = frame_times(total, fps)
        .into_iter()
        .map(|t| render_frame(tr, t))
        .collect();
    Ok(KeyframeDocument {
        schema_version: KEYFRAME_SCHEMA_VERSION.into(),
        spec: tr.spec.clone(),
        viewport: tr.viewport,
        palette: PALETTE.iter().map(|c| c.to_string()).collect(),
        fps,
        total_duration: total,
        frames,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_digit_formatting() {
        assert_eq!(fmt3(1.0), "1.000");
        assert_eq!(fmt3(-0.0001), "0.000");
        assert_eq!(fmt3(2.0 / 3.0), "0.667");
        assert_eq!(fmt3(-12.3456), "-12.346");
    }

    #[test]
    fn frame_count_and_forced_end() {
        assert_eq!(frame_times(3.0, 50.0).len(), 151);
        let t = frame_times(1.0, 3.0);
        assert_eq!(t.len(), 4);
        assert_eq!(*t.last().unwrap(), 1.0);
        let odd = frame_times(1.01, 7.0);
        assert_eq!(*odd.last().unwrap(), 1.01);
        assert!(odd.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(frame_times(0.0, 50.0), vec![0.0]);
    }
}
