//! Wire shape function and the axial 1+1D reduction of the wire metric.
//!
//! Along the wire axis the line element reduces to
//! `ds² = -c_v² F dt² + dz²`, i.e. a flat metric with a coordinate light
//! speed `c_z = c_v √F` that depends on the (fixed) radial distance.

use serde::Serialize;

use crate::error::{Error, Result};

/// Default bound for `d ≪ L`: the separation may be at most `L / 100`.
pub const DEFAULT_SEPARATION_RATIO: f64 = 100.0;

/// Radius and exponent of the wire shape function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WireProfile {
    radius: f64,
    exponent: u32,
}

impl WireProfile {
    pub fn new(radius: f64, exponent: u32) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::domain(
                "wire radius must be positive and finite",
                radius,
            ));
        }
        if exponent < 2 {
            return Err(Error::domain(
                "shape exponent must be >= 2",
                exponent as f64,
            ));
        }
        Ok(Self { radius, exponent })
    }

    /// Accepts a real-valued exponent only when it is an integer >= 2.
    pub fn from_real_exponent(radius: f64, exponent: f64) -> Result<Self> {
        if exponent.fract() != 0.0 || !exponent.is_finite() || exponent < 2.0 {
            return Err(Error::domain(
                "shape exponent must be an integer >= 2",
                exponent,
            ));
        }
        Self::new(radius, exponent as u32)
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }
}

/// `F(r) = 1 + (1/r - 1/R)^n` inside the wire radius, exactly 1 outside.
pub fn shape_function(profile: &WireProfile, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::domain("central singularity / unphysical radius", r));
    }
    if r > profile.radius {
        return Ok(1.0);
    }
    let gap = 1.0 / r - 1.0 / profile.radius;
    Ok(1.0 + gap.powi(profile.exponent as i32))
}

pub(crate) fn check_shape_and_speed(f: f64, c_v: f64) -> Result<()> {
    if !(f >= 1.0) {
        return Err(Error::domain("shape function value must be >= 1", f));
    }
    if !(c_v > 0.0) {
        return Err(Error::domain("vacuum light speed must be positive", c_v));
    }
    Ok(())
}

/// Coordinate light speed `c_v √F` along the axis of a wire at rest.
pub fn axial_light_speed(f: f64, c_v: f64) -> Result<f64> {
    check_shape_and_speed(f, c_v)?;
    Ok(c_v * f.sqrt())
}

/// Components of a 1+1D metric `ds² = g_tt dt² + 2 g_tz dt dz + g_zz dz²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MetricCoefficients {
    pub g_tt: f64,
    pub g_tz: f64,
    pub g_zz: f64,
}

impl MetricCoefficients {
    pub fn new(g_tt: f64, g_tz: f64, g_zz: f64) -> Self {
        Self { g_tt, g_tz, g_zz }
    }

    pub fn determinant(&self) -> f64 {
        self.g_tt * self.g_zz - self.g_tz * self.g_tz
    }

    pub fn is_lorentzian(&self) -> bool {
        self.determinant() < 0.0
    }

    /// Interval of a coordinate displacement `(dt, dz)`.
    pub fn interval(&self, dt: f64, dz: f64) -> f64 {
        self.g_tt * dt * dt + 2.0 * self.g_tz * dt * dz + self.g_zz * dz * dz
    }

    /// The two coordinate velocities `dz/dt` along which `ds² = 0`, ascending.
    ///
    /// Uses the cancellation-free form of the quadratic roots. Fails when
    /// `g_zz = 0` (one family escapes to infinite coordinate speed) or when
    /// the form is not Lorentzian.
    pub fn null_speeds(&self) -> Result<[f64; 2]> {
        let disc = self.g_tz * self.g_tz - self.g_tt * self.g_zz;
        if !(disc > 0.0) {
            return Err(Error::Singular {
                what: "metric is not Lorentzian; no pair of null directions",
            });
        }
        if self.g_zz == 0.0 {
            return Err(Error::Singular {
                what: "g_zz vanishes; one null family has infinite coordinate speed",
            });
        }
        let root = disc.sqrt();
        let q = -(self.g_tz + self.g_tz.signum() * root);
        let (a, b) = if q == 0.0 {
            // g_tz = 0: symmetric roots
            (root / self.g_zz, -root / self.g_zz)
        } else {
            (q / self.g_zz, self.g_tt / q)
        };
        Ok(if a <= b { [a, b] } else { [b, a] })
    }

    /// Same metric divided by a nonzero conformal factor.
    pub fn scaled(&self, factor: f64) -> Self {
        Self::new(self.g_tt / factor, self.g_tz / factor, self.g_zz / factor)
    }
}

/// Reduced axial metric `-c_v² F dt² + dz²`.
pub fn axial_metric(f: f64, c_v: f64) -> Result<MetricCoefficients> {
    check_shape_and_speed(f, c_v)?;
    Ok(MetricCoefficients::new(-c_v * c_v * f, 0.0, 1.0))
}

/// Two parallel wires of radius `R` a distance `d` apart, traversed over length `L`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TwoWireGeometry {
    pub separation: f64,
    pub path_length: f64,
    pub radius: f64,
}

impl TwoWireGeometry {
    pub fn new(separation: f64, path_length: f64, radius: f64) -> Result<Self> {
        Self::with_ratio(separation, path_length, radius, DEFAULT_SEPARATION_RATIO)
    }

    /// Enforces `2R < d` and `d <= L / separation_ratio`.
    pub fn with_ratio(
        separation: f64,
        path_length: f64,
        radius: f64,
        separation_ratio: f64,
    ) -> Result<Self> {
        if !(radius > 0.0) {
            return Err(Error::domain("wire radius must be positive", radius));
        }
        if !(path_length > 0.0) {
            return Err(Error::domain("path length must be positive", path_length));
        }
        if !(separation_ratio >= 1.0) {
            return Err(Error::domain(
                "separation ratio must be >= 1",
                separation_ratio,
            ));
        }
        if !(separation > 2.0 * radius) {
            return Err(Error::domain("wires overlap: need 2R < d", separation));
        }
        if separation > path_length / separation_ratio {
            return Err(Error::domain(
                "separation not small against path length",
                separation,
            ));
        }
        Ok(Self {
            separation,
            path_length,
            radius,
        })
    }
}
