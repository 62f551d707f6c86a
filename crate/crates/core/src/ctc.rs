//! Closed-timelike-curve conditions for the two-wire loop and the
//! parameter-space scans built on them.
//!
//! The loop runs a distance `L` along the wire at rest (speed `c_v√F₁`) and
//! back along the boosted wire against its motion (signed speed from
//! [`null_speed_backward`]). The total lab time is negative exactly when
//! `β > (√F₁ + √F₂)/(1 + √F₁√F₂)`.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::boost::{
    horizon_condition, negative_time_condition, null_speed_backward, pulse_frame_params,
    BoostParameter,
};
use crate::error::{Error, Result};
use crate::metric::check_shape_and_speed;
use crate::tolerance::{HORIZON_TOL, SINGULAR_TOL};

/// Where a `(c_z, β)` point falls relative to the negative-time and CTC boundaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RegionLabel {
    /// The round trip takes positive time and the return leg runs forward.
    PositiveTime,
    /// The return leg runs backwards in time but the loop total is still >= 0.
    NegativeLeg,
    /// Total round-trip time is negative.
    Ctc,
    /// Within tolerance of the pole `√F β = 1`.
    Singular,
    Invalid,
}

impl RegionLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            RegionLabel::PositiveTime => "POSITIVE_TIME",
            RegionLabel::NegativeLeg => "NEGATIVE_LEG",
            RegionLabel::Ctc => "CTC",
            RegionLabel::Singular => "SINGULAR",
            RegionLabel::Invalid => "INVALID",
        }
    }
}

impl fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn check_shape(f: f64) -> Result<()> {
    if !(f >= 1.0) || !f.is_finite() {
        return Err(Error::domain(
            "shape function value must be finite and >= 1",
            f,
        ));
    }
    Ok(())
}

/// Smallest boost giving a CTC between two identical wires: `2/(√F + 1/√F)`.
pub fn ctc_threshold_beta(f: f64) -> Result<f64> {
    check_shape(f)?;
    let s = f.sqrt();
    Ok(2.0 / (s + 1.0 / s))
}

/// Smallest boost giving a CTC when the rest wire has `F₁` and the boosted one `F₂`.
pub fn ctc_threshold_beta_general(f1: f64, f2: f64) -> Result<f64> {
    check_shape(f1)?;
    check_shape(f2)?;
    let (s1, s2) = (f1.sqrt(), f2.sqrt());
    Ok((1.0 + s2 / s1) / (1.0 / s1 + s2))
}

/// Signed lab time of the loop: `L/(c_v√F₁) + L/c_z^β(F₂, β)`.
pub fn round_trip_time(
    length: f64,
    f1: f64,
    f2: f64,
    beta: BoostParameter,
    c_v: f64,
) -> Result<f64> {
    if !(length > 0.0) {
        return Err(Error::domain("path length must be positive", length));
    }
    check_shape_and_speed(f1, c_v)?;
    let return_speed = null_speed_backward(f2, beta, c_v)?;
    Ok(length / (c_v * f1.sqrt()) + length / return_speed)
}

/// Boost at which the return leg speed equals minus the outbound speed.
///
/// Solves `c_v√F₁ = -c_z^β(F₂, β)` for `β`. This lands on the zero-time
/// boundary, so the design closes the loop with no time to spare.
pub fn symmetric_beta(f1: f64, f2: f64) -> Result<f64> {
    check_shape(f1)?;
    check_shape(f2)?;
    if !(f1 * f2 > 1.0) {
        return Err(Error::domain("symmetric design needs F1 * F2 > 1", f1 * f2));
    }
    // √F₁(1 - √F₂β) = β - √F₂  =>  β(1 + √F₁√F₂) = √F₁ + √F₂
    let (s1, s2) = (f1.sqrt(), f2.sqrt());
    let slope = 1.0 + s1 * s2;
    let beta = (s1 + s2) / slope;
    if beta >= 1.0 {
        return Err(Error::domain("symmetric boost is not subluminal", beta));
    }
    Ok(beta)
}

/// Region of the two-wire loop with rest wire `F₁` and boosted wire `F₂`.
///
/// Never fails: out-of-domain input is labelled [`RegionLabel::Invalid`].
pub fn classify(f1: f64, f2: f64, beta: f64) -> RegionLabel {
    if !(f1 >= 1.0 && f2 >= 1.0 && f1.is_finite() && f2.is_finite()) {
        return RegionLabel::Invalid;
    }
    let Ok(boost) = BoostParameter::new(beta) else {
        return RegionLabel::Invalid;
    };
    if !(beta > 0.0) {
        return RegionLabel::Invalid;
    }
    if (f2.sqrt() * beta - 1.0).abs() <= SINGULAR_TOL {
        return RegionLabel::Singular;
    }
    let Ok(threshold) = ctc_threshold_beta_general(f1, f2) else {
        return RegionLabel::Invalid;
    };
    if beta > threshold {
        RegionLabel::Ctc
    } else if negative_time_condition(f2, boost) {
        RegionLabel::NegativeLeg
    } else {
        RegionLabel::PositiveTime
    }
}

/// Region for two identical wires whose rest-frame light speed is `c_z_rest` (in `c_v`).
pub fn classify_point(c_z_rest: f64, beta: f64) -> RegionLabel {
    if !(c_z_rest >= 1.0) || !c_z_rest.is_finite() {
        return RegionLabel::Invalid;
    }
    let f = c_z_rest * c_z_rest;
    if !(beta > 0.0 && beta < 1.0) {
        return RegionLabel::Invalid;
    }
    if (c_z_rest * beta - 1.0).abs() <= SINGULAR_TOL {
        return RegionLabel::Singular;
    }
    let Ok(threshold) = ctc_threshold_beta(f) else {
        return RegionLabel::Invalid;
    };
    if beta > threshold {
        RegionLabel::Ctc
    } else if c_z_rest * beta > 1.0 {
        RegionLabel::NegativeLeg
    } else {
        RegionLabel::PositiveTime
    }
}

/// Evenly spaced samples from `min` to `max` inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Axis {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl Axis {
    /// A degenerate range (`min == max`) always yields one sample.
    pub fn new(min: f64, max: f64, count: usize) -> Result<Self> {
        if !min.is_finite() || !max.is_finite() {
            return Err(Error::domain(
                "axis bounds must be finite",
                if min.is_finite() { max } else { min },
            ));
        }
        if max < min {
            return Err(Error::domain("axis max below min", max));
        }
        if count == 0 {
            return Err(Error::domain("axis needs at least one sample", 0.0));
        }
        let count = if max == min { 1 } else { count };
        if count == 1 && max != min {
            return Err(Error::domain(
                "a one-sample axis needs min == max",
                max - min,
            ));
        }
        Ok(Self { min, max, count })
    }

    pub fn step(&self) -> f64 {
        if self.count <= 1 {
            0.0
        } else {
            (self.max - self.min) / (self.count - 1) as f64
        }
    }

    pub fn value(&self, i: usize) -> f64 {
        if i + 1 == self.count {
            self.max
        } else {
            self.min + i as f64 * self.step()
        }
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.count).map(|i| self.value(i))
    }
}

/// Discretization of the `(c_z, β)` plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScanGrid {
    /// Boost values, inside (0, 1).
    pub beta: Axis,
    /// Rest-frame light speed of the lab wire, in units of `c_v`, >= 1.
    pub speed: Axis,
    /// Shape value of the boosted wire; `None` means both wires share `F = c_z²`.
    pub boosted_f: Option<f64>,
}

impl ScanGrid {
    pub fn new(beta: Axis, speed: Axis) -> Result<Self> {
        Self::with_boosted_wire(beta, speed, None)
    }

    pub fn with_boosted_wire(beta: Axis, speed: Axis, boosted_f: Option<f64>) -> Result<Self> {
        if !(beta.min > 0.0 && beta.max < 1.0) {
            return Err(Error::domain(
                "beta range must lie inside (0, 1)",
                beta.min.min(beta.max),
            ));
        }
        if !(speed.min >= 1.0) {
            return Err(Error::domain(
                "speed range must be >= 1 (units of c_v)",
                speed.min,
            ));
        }
        if let Some(f2) = boosted_f {
            check_shape(f2)?;
        }
        Ok(Self {
            beta,
            speed,
            boosted_f,
        })
    }

    pub fn len(&self) -> usize {
        self.beta.count * self.speed.count
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl Default for ScanGrid {
    /// `c_z ∈ [1, 2.5]`, `β ∈ [0.01, 0.99]`, 200 × 200.
    fn default() -> Self {
        Self {
            beta: Axis {
                min: 0.01,
                max: 0.99,
                count: 200,
            },
            speed: Axis {
                min: 1.0,
                max: 2.5,
                count: 200,
            },
            boosted_f: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Fig2Row {
    /// Lab-wire light speed at rest, units of `c_v`.
    pub c_z_rest: f64,
    pub beta: f64,
    /// Return-leg speed in the lab, same units as `c_v`; absent at singular or invalid points.
    pub c_z_beta: Option<f64>,
    pub region: RegionLabel,
}

fn fig2_row(c_z_rest: f64, beta: f64, boosted_f: Option<f64>, c_v: f64) -> Fig2Row {
    let f1 = c_z_rest * c_z_rest;
    let (f2, region) = match boosted_f {
        None => (f1, classify_point(c_z_rest, beta)),
        Some(f2) => (f2, classify(f1, f2, beta)),
    };
    let c_z_beta = match region {
        RegionLabel::Singular | RegionLabel::Invalid => None,
        _ => BoostParameter::new(beta)
            .and_then(|b| null_speed_backward(f2, b, c_v))
            .ok(),
    };
    Fig2Row {
        c_z_rest,
        beta,
        c_z_beta,
        region,
    }
}

/// Table of return-leg speeds and region labels over the grid.
///
/// Rows are beta-major, then speed, regardless of how the points are evaluated.
pub fn scan_figure2(grid: &ScanGrid, c_v: f64) -> Result<Vec<Fig2Row>> {
    if !(c_v > 0.0) {
        return Err(Error::domain("vacuum light speed must be positive", c_v));
    }
    let rows = (0..grid.beta.count)
        .into_par_iter()
        .flat_map_iter(|i| {
            let beta = grid.beta.value(i);
            grid.speed
                .values()
                .map(move |c| fig2_row(c, beta, grid.boosted_f, c_v))
                .collect::<Vec<_>>()
        })
        .collect();
    Ok(rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Fig3Row {
    pub f: f64,
    pub c_p: Option<f64>,
    pub v_pulse: Option<f64>,
    pub abs_c_p: Option<f64>,
    /// At or past the pulse-frame horizon (`c_p² <= v²`, or on the pole).
    pub horizon: bool,
}

/// Pulse-frame speeds against `F` at fixed boost.
pub fn scan_figure3(beta: f64, f_axis: &Axis, c_v: f64) -> Result<Vec<Fig3Row>> {
    if !(beta >= 0.0) {
        return Err(Error::domain("fixed boost must be >= 0", beta));
    }
    let boost = BoostParameter::new(beta)?;
    if !(c_v > 0.0) {
        return Err(Error::domain("vacuum light speed must be positive", c_v));
    }
    check_shape(f_axis.min)?;
    Ok(f_axis
        .values()
        .map(|f| match pulse_frame_params(f, boost, c_v) {
            Ok(p) => Fig3Row {
                f,
                c_p: Some(p.c_p),
                v_pulse: Some(p.v_pulse),
                abs_c_p: Some(p.abs_c_p()),
                horizon: horizon_condition(&p, HORIZON_TOL) || p.horizon_gap() < 0.0,
            },
            Err(_) => Fig3Row {
                f,
                c_p: None,
                v_pulse: None,
                abs_c_p: None,
                horizon: true,
            },
        })
        .collect())
}
