//! Classical analogue: scattering sources of a plane wavefront on tilted surfaces.
//!
//! A wavefront sweeping a surface tilted by `θ` produces a bright spot that a
//! camera sees moving along `x` at `c_v/(1 - cot θ)`: superluminal for
//! `θ > 45°` and negative for `θ < 45°`. Two joined surfaces reproduce the
//! two legs of the wire loop, the second one running backwards in time.

use std::f64::consts::FRAC_PI_2;
use std::f64::consts::FRAC_PI_4;

use serde::Serialize;

use crate::boost::BoostParameter;
use crate::ctc::{ctc_threshold_beta_general, symmetric_beta};
use crate::error::{Error, Result};
use crate::tolerance::REL_TOL;

/// Meeting points closer than this to `x = 1/2` count as the junction.
pub const JUNCTION_TOL: f64 = 1e-9;

fn arccot(x: f64) -> f64 {
    1.0f64.atan2(x)
}

/// Spot speed along `x` for a surface at angle `theta` (radians).
pub fn scatter_speed(theta: f64, c_v: f64) -> Result<f64> {
    if !(theta > 0.0 && theta <= FRAC_PI_2) {
        return Err(Error::domain(
            "surface angle must lie in (0, 90] degrees",
            theta.to_degrees(),
        ));
    }
    if (theta - FRAC_PI_4).abs() <= REL_TOL * FRAC_PI_4 {
        return Err(Error::Singular {
            what: "surface at 45 degrees: spot speed diverges",
        });
    }
    let cot = theta.cos() / theta.sin();
    Ok(c_v / (1.0 - cot))
}

/// Surface angle whose spot speed equals the counter-moving speed of a wire boosted by `beta`.
///
/// The negative-time boundary `√Fβ = 1` maps to exactly 45°.
pub fn angle_for_boosted_wire(f: f64, beta: BoostParameter) -> Result<f64> {
    if !(f >= 1.0) || !f.is_finite() {
        return Err(Error::domain(
            "shape function value must be finite and >= 1",
            f,
        ));
    }
    let s = f.sqrt();
    let b = beta.value();
    let den = s - b;
    if den.abs() <= REL_TOL {
        return Err(Error::domain(
            "sqrt(F) = beta: zero return speed has no finite angle",
            b,
        ));
    }
    Ok(arccot(1.0 - (1.0 - s * b) / den))
}

/// Surface angle whose spot speed equals `c_v√F₁`.
pub fn angle_for_rest_wire(f1: f64) -> Result<f64> {
    if !(f1 >= 1.0) || !f1.is_finite() {
        return Err(Error::domain(
            "shape function value must be finite and >= 1",
            f1,
        ));
    }
    Ok(arccot(1.0 - 1.0 / f1.sqrt()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DesignMode {
    /// Equal and opposite spot speeds; the boost sits on the zero-time boundary.
    Symmetric,
    /// Use the supplied boost, which must exceed the CTC threshold.
    AsGiven,
}

/// Two joined surfaces: the first covers `x ∈ [0, 1/2]`, the second `[1/2, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SurfaceAssembly {
    /// Angle of the first surface, radians, above 45°.
    pub theta1: f64,
    /// Angle of the second surface, radians, below 45°.
    pub theta2: f64,
    pub f1: f64,
    pub f2: f64,
    pub beta: f64,
    pub mode: DesignMode,
    /// Spot speed on the first surface.
    pub v1: f64,
    /// Spot speed on the second surface (negative).
    pub v2: f64,
}

impl SurfaceAssembly {
    pub fn theta1_degrees(&self) -> f64 {
        self.theta1.to_degrees()
    }

    pub fn theta2_degrees(&self) -> f64 {
        self.theta2.to_degrees()
    }
}

/// Surface angles encoding the wire loop `(F₁, F₂, β)`.
pub fn design_ctc_assembly(
    f1: f64,
    f2: f64,
    beta: Option<f64>,
    mode: DesignMode,
    c_v: f64,
) -> Result<SurfaceAssembly> {
    if !(c_v > 0.0) {
        return Err(Error::domain("vacuum light speed must be positive", c_v));
    }
    let threshold = ctc_threshold_beta_general(f1, f2)?;
    let beta = match mode {
        DesignMode::Symmetric => match symmetric_beta(f1, f2) {
            Ok(b) => b,
            Err(_) => {
                return Err(Error::CtcConditionUnmet {
                    beta: 1.0,
                    threshold,
                })
            }
        },
        DesignMode::AsGiven => {
            let beta = beta.ok_or(Error::domain("AS_GIVEN design needs a boost", f64::NAN))?;
            BoostParameter::new(beta)?;
            if !(beta > threshold) {
                return Err(Error::CtcConditionUnmet { beta, threshold });
            }
            beta
        }
    };
    let boost = BoostParameter::new(beta)?;
    let theta1 = angle_for_rest_wire(f1)?;
    let theta2 = angle_for_boosted_wire(f2, boost)?;
    let v1 = scatter_speed(theta1, c_v)?;
    let v2 = scatter_speed(theta2, c_v)?;
    if !(v1 > 0.0 && v2 < 0.0) {
        return Err(Error::Inconsistent(format!(
            "surface speeds must be positive then negative, got v1={v1}, v2={v2}"
        )));
    }
    Ok(SurfaceAssembly {
        theta1,
        theta2,
        f1,
        f2,
        beta,
        mode,
        v1,
        v2,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ImageId {
    Left,
    Right,
    /// Used by the annihilation event, which involves both images.
    Both,
}

impl ImageId {
    pub fn as_str(self) -> &'static str {
        match self {
            ImageId::Left => "left",
            ImageId::Right => "right",
            ImageId::Both => "both",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EventKind {
    Appear,
    MoveSample,
    Annihilate,
}

impl EventKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EventKind::Appear => "appear",
            EventKind::MoveSample => "move-sample",
            EventKind::Annihilate => "annihilate",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScatterEvent {
    pub time: f64,
    pub x: f64,
    pub image_id: ImageId,
    pub kind: EventKind,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScatterTimeline {
    pub events: Vec<ScatterEvent>,
    pub v1: f64,
    pub v2: f64,
    pub meeting_x: f64,
    pub meeting_time: f64,
    /// Time the left image needs to reach the meeting point.
    pub left_arrival: f64,
    pub right_arrival: f64,
    pub meets_at_junction: bool,
}

impl ScatterTimeline {
    /// Images appearing together at `x = 0` (speed `v1 > 0`) and `x = 1` (speed `v2 < 0`).
    pub fn from_speeds(v1: f64, v2: f64, n_samples: usize) -> Result<Self> {
        if n_samples < 2 {
            return Err(Error::domain(
                "need at least two samples per image",
                n_samples as f64,
            ));
        }
        if !(v1 > 0.0 && v2 < 0.0) || !v1.is_finite() || !v2.is_finite() {
            return Err(Error::Inconsistent(format!(
                "images never meet: left speed {v1} must be > 0 and right speed {v2} < 0"
            )));
        }
        let meeting_time = 1.0 / (v1 - v2);
        let meeting_x = v1 * meeting_time;
        let left_arrival = meeting_x / v1;
        let right_arrival = (1.0 - meeting_x) / -v2;

        let mut events = Vec::with_capacity(2 * n_samples + 3);
        events.push(ScatterEvent {
            time: 0.0,
            x: 0.0,
            image_id: ImageId::Left,
            kind: EventKind::Appear,
        });
        events.push(ScatterEvent {
            time: 0.0,
            x: 1.0,
            image_id: ImageId::Right,
            kind: EventKind::Appear,
        });
        for k in 0..n_samples {
            let t = meeting_time * k as f64 / (n_samples - 1) as f64;
            events.push(ScatterEvent {
                time: t,
                x: v1 * t,
                image_id: ImageId::Left,
                kind: EventKind::MoveSample,
            });
            events.push(ScatterEvent {
                time: t,
                x: 1.0 + v2 * t,
                image_id: ImageId::Right,
                kind: EventKind::MoveSample,
            });
        }
        events.push(ScatterEvent {
            time: meeting_time,
            x: meeting_x,
            image_id: ImageId::Both,
            kind: EventKind::Annihilate,
        });
        events.sort_by(|a, b| {
            a.time
                .total_cmp(&b.time)
                .then(a.kind.cmp(&b.kind))
                .then(a.image_id.cmp(&b.image_id))
        });

        Ok(Self {
            events,
            v1,
            v2,
            meeting_x,
            meeting_time,
            left_arrival,
            right_arrival,
            meets_at_junction: (meeting_x - 0.5).abs() <= JUNCTION_TOL,
        })
    }
}

/// Analytic timeline of the two images of an assembly; both appear at `t = 0`.
pub fn simulate_wavefront(assembly: &SurfaceAssembly, n_samples: usize) -> Result<ScatterTimeline> {
    ScatterTimeline::from_speeds(assembly.v1, assembly.v2, n_samples)
}
