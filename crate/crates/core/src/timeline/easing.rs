use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum EasingKind {
    #[default]
    Linear,
    CubicInOut,
}

impl EasingKind {
    /// Largest slope of the easing curve on `[0, 1]`.
    pub fn max_slope(self) -> f64 {
        match self {
            EasingKind::Linear => 1.0,
            EasingKind::CubicInOut => 3.0,
        }
    }
}

/// Maps progress in `[0, 1]` (clamped) through the easing curve.
pub fn ease(s: f64, kind: EasingKind) -> f64 {
    let s = s.clamp(0.0, 1.0);
    match kind {
        EasingKind::Linear => s,
        EasingKind::CubicInOut => {
            if s < 0.5 {
                4.0 * s * s * s
            } else {
                1.0 - (-2.0 * s + 2.0).powi(3) / 2.0
            }
        }
    }
}
