//! Lorentz boosts of the wire metric and its null-geodesic speeds.
//!
//! A wire moving with `β = v/c_v` along `+z` is seen from the lab with the
//! metric `ds² = -γ²F(c_v dt - β dz)² + γ²(dz - β c_v dt)²`. Its two null
//! families give the co-moving speed [`null_speed_forward`] and the
//! counter-moving speed [`null_speed_backward`], which turns negative once
//! `√F β > 1`. The same metric, divided by `g_zz`, takes the moving-pulse
//! form `-(c_p² - v²)dt² + 2v dt dz + dz²` ([`pulse_frame_params`]).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::metric::{check_shape_and_speed, MetricCoefficients};
use crate::tolerance::REL_TOL;

/// Dimensionless boost velocity `β = v / c_v`, strictly inside (-1, 1).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct BoostParameter(f64);

impl BoostParameter {
    pub fn new(beta: f64) -> Result<Self> {
        if !(beta.abs() < 1.0) {
            return Err(Error::domain("boost must satisfy |beta| < 1", beta));
        }
        Ok(Self(beta))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// Lorentz factor `1/√(1-β²)`.
    pub fn gamma(self) -> f64 {
        1.0 / (1.0 - self.0 * self.0).sqrt()
    }

    pub fn inverse(self) -> Self {
        Self(-self.0)
    }
}

impl TryFrom<f64> for BoostParameter {
    type Error = Error;

    fn try_from(beta: f64) -> Result<Self> {
        Self::new(beta)
    }
}

fn check_c_v(c_v: f64) -> Result<()> {
    if !(c_v > 0.0) {
        return Err(Error::domain("vacuum light speed must be positive", c_v));
    }
    Ok(())
}

/// Standard boost `t' = γ(t - βz/c_v)`, `z' = γ(z - βc_v t)`.
pub fn lorentz_transform(t: f64, z: f64, beta: BoostParameter, c_v: f64) -> Result<(f64, f64)> {
    check_c_v(c_v)?;
    let b = beta.value();
    let g = beta.gamma();
    Ok((g * (t - b * z / c_v), g * (z - b * c_v * t)))
}

/// Lab-frame metric of a wire moving with boost `beta`.
pub fn boosted_metric(f: f64, beta: BoostParameter, c_v: f64) -> Result<MetricCoefficients> {
    check_shape_and_speed(f, c_v)?;
    let b = beta.value();
    let g2 = 1.0 / (1.0 - b * b);
    Ok(MetricCoefficients::new(
        -g2 * c_v * c_v * (f - b * b),
        g2 * c_v * b * (f - 1.0),
        g2 * (1.0 - f * b * b),
    ))
}

/// Speed of the photon moving with the wire: `c_v(β + √F)/(1 + √Fβ)`.
pub fn null_speed_forward(f: f64, beta: BoostParameter, c_v: f64) -> Result<f64> {
    check_shape_and_speed(f, c_v)?;
    let s = f.sqrt();
    let b = beta.value();
    let den = 1.0 + s * b;
    if den.abs() <= REL_TOL {
        return Err(Error::Singular {
            what: "1 + sqrt(F) beta = 0 in the co-moving null speed",
        });
    }
    Ok(c_v * (b + s) / den)
}

/// Signed speed `c_v(√F - β)/(1 - √Fβ)` of the photon moving against the wire.
///
/// Negative values mean the leg runs backwards in lab coordinate time.
pub fn null_speed_backward(f: f64, beta: BoostParameter, c_v: f64) -> Result<f64> {
    check_shape_and_speed(f, c_v)?;
    let s = f.sqrt();
    let b = beta.value();
    let den = 1.0 - s * b;
    if den.abs() <= REL_TOL {
        return Err(Error::Singular {
            what: "sqrt(F) beta = 1: negative-time boundary",
        });
    }
    Ok(c_v * (s - b) / den)
}

/// `√F β > 1`: the counter-moving leg runs backwards in time.
///
/// Necessary for a closed timelike curve, not sufficient.
pub fn negative_time_condition(f: f64, beta: BoostParameter) -> bool {
    f.sqrt() * beta.value() > 1.0
}

/// Background speed and pulse speed of the moving-pulse form of the metric.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PulseFrameParams {
    /// Background propagation speed as computed; negative past the horizon.
    pub c_p: f64,
    pub v_pulse: f64,
}

impl PulseFrameParams {
    pub fn new(c_p: f64, v_pulse: f64) -> Self {
        Self { c_p, v_pulse }
    }

    /// `|c_p|`; the metric only depends on `c_p²`.
    pub fn abs_c_p(&self) -> f64 {
        self.c_p.abs()
    }

    /// `c_p² - v²`, minus the time-time metric coefficient.
    pub fn horizon_gap(&self) -> f64 {
        // factored: the roots of the pulse metric are then exactly c_p - v and -(c_p + v)
        (self.c_p - self.v_pulse) * (self.c_p + self.v_pulse)
    }
}

/// `c_p = c_v√F(1-β²)/(1-Fβ²)`, `v = c_v β(F-1)/(1-Fβ²)`.
pub fn pulse_frame_params(f: f64, beta: BoostParameter, c_v: f64) -> Result<PulseFrameParams> {
    check_shape_and_speed(f, c_v)?;
    let b = beta.value();
    let den = 1.0 - f * b * b;
    if den.abs() <= REL_TOL {
        return Err(Error::Singular {
            what: "F beta^2 = 1: coordinate degeneration of the pulse form",
        });
    }
    Ok(PulseFrameParams {
        c_p: c_v * f.sqrt() * (1.0 - b * b) / den,
        v_pulse: c_v * b * (f - 1.0) / den,
    })
}

/// `-(c_p² - v²)dt² + 2v dt dz + dz²`.
pub fn pulse_metric(p: &PulseFrameParams) -> MetricCoefficients {
    MetricCoefficients::new(-p.horizon_gap(), p.v_pulse, 1.0)
}

/// `|c_p² - v²| <= tol · max(c_p², v²)`.
pub fn horizon_condition(p: &PulseFrameParams, tol: f64) -> bool {
    let cp2 = p.c_p * p.c_p;
    let v2 = p.v_pulse * p.v_pulse;
    (cp2 - v2).abs() <= tol * cp2.max(v2)
}
