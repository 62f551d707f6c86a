//! SQUID-array transmission line as a tunable-light-speed medium.
//!
//! Each SQUID acts as a flux-tunable Josephson inductance, so the line speed
//! follows `c²(φ) = c₀² cos(πφ/φ₀)`. A DC bias sets the simulated vacuum speed
//! `c_v² = c₀² cos(πφ_DC/φ₀)`; the AC part then shapes
//! `F = sec(πφ_DC/φ₀) cos(πφ/φ₀)`. Fluxes are stored as fractions of `φ₀`.
//!
//! Because the dispersion is a cosine on `|φ| < φ₀/2`, no flux setting ever
//! produces `c² < 0`. Any target requiring a negative effective light speed
//! is therefore reported as [`Verdict::ChronologyProtected`].

use std::f64::consts::PI;

use serde::Serialize;

use crate::boost::PulseFrameParams;
use crate::error::{Error, Result};
use crate::metric::{shape_function, WireProfile};

/// Magnetic flux quantum `h/2e` in webers.
pub const FLUX_QUANTUM: f64 = 2.067_833_848e-15;

/// Default ceiling on the DC bias fraction; beyond it phase fluctuations spoil the model.
pub const DEFAULT_FLUX_CEILING: f64 = 0.45;

/// Junction inductance diverges at half a flux quantum.
pub const HARD_FLUX_WALL: f64 = 0.5;

// slack for comparisons against a ceiling that was hit exactly up to rounding
const CEILING_SLACK: f64 = 1e-12;

/// `cos(π x)`, evaluated through `sin` near the wall so small values keep their relative accuracy.
fn cos_pi(x: f64) -> f64 {
    let a = x.abs();
    if a > 0.25 && a <= 0.75 {
        (PI * (0.5 - a)).sin()
    } else {
        (PI * x).cos()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SquidArrayParams {
    /// Line speed at zero flux.
    pub c0: f64,
    /// Junction critical current; inductance reporting only.
    pub critical_current: f64,
    /// SQUID capacitance; inductance reporting only.
    pub capacitance: f64,
    /// Bound on `|φ_DC|/φ₀`, in (0, 0.5).
    pub flux_ceiling: f64,
    /// Bound on the total `|φ_ext|/φ₀`, in (0, 0.5]; 0.5 itself stays excluded.
    pub total_flux_limit: f64,
}

impl Default for SquidArrayParams {
    fn default() -> Self {
        Self {
            c0: 1.0,
            critical_current: 1.0,
            capacitance: 1.0,
            flux_ceiling: DEFAULT_FLUX_CEILING,
            total_flux_limit: HARD_FLUX_WALL,
        }
    }
}

impl SquidArrayParams {
    pub fn new(c0: f64, flux_ceiling: f64) -> Result<Self> {
        Self {
            c0,
            flux_ceiling,
            ..Self::default()
        }
        .validated()
    }

    pub fn with_total_flux_limit(self, total_flux_limit: f64) -> Result<Self> {
        Self {
            total_flux_limit,
            ..self
        }
        .validated()
    }

    pub fn validated(self) -> Result<Self> {
        if !(self.c0 > 0.0) || !self.c0.is_finite() {
            return Err(Error::domain(
                "zero-flux line speed must be positive",
                self.c0,
            ));
        }
        if !(self.flux_ceiling > 0.0 && self.flux_ceiling < HARD_FLUX_WALL) {
            return Err(Error::domain(
                "flux ceiling must lie in (0, 0.5)",
                self.flux_ceiling,
            ));
        }
        if !(self.total_flux_limit > 0.0 && self.total_flux_limit <= HARD_FLUX_WALL) {
            return Err(Error::domain(
                "total flux limit must lie in (0, 0.5]",
                self.total_flux_limit,
            ));
        }
        if !(self.critical_current > 0.0) || !(self.capacitance > 0.0) {
            return Err(Error::domain(
                "critical current and capacitance must be positive",
                self.critical_current.min(self.capacitance),
            ));
        }
        Ok(self)
    }

    fn check_dc(&self, dc: f64) -> Result<()> {
        if !(dc.abs() <= self.flux_ceiling * (1.0 + CEILING_SLACK)) {
            return Err(Error::OutOfRange {
                quantity: "dc_flux_fraction",
                value: dc,
                bound: self.flux_ceiling,
            });
        }
        Ok(())
    }

    fn check_total(&self, total: f64) -> Result<()> {
        if !(total.abs() < HARD_FLUX_WALL) {
            return Err(Error::OutOfRange {
                quantity: "total_flux_fraction",
                value: total,
                bound: HARD_FLUX_WALL,
            });
        }
        if total.abs() > self.total_flux_limit * (1.0 + CEILING_SLACK) {
            return Err(Error::OutOfRange {
                quantity: "total_flux_fraction",
                value: total,
                bound: self.total_flux_limit,
            });
        }
        Ok(())
    }

    /// `c₀ √cos(πφ)` for a total flux fraction within the limits.
    pub fn line_speed(&self, phi_fraction: f64) -> Result<f64> {
        self.check_total(phi_fraction)?;
        Ok(self.c0 * cos_pi(phi_fraction).sqrt())
    }

    /// Largest reachable `c_z/c_v`, `√sec(π φ_DC)`, attained at zero total flux.
    pub fn max_speed_ratio(&self, dc: f64) -> Result<f64> {
        self.check_dc(dc)?;
        Ok((1.0 / cos_pi(dc)).sqrt())
    }

    /// AC flux fraction that shapes `F_target` on top of the bias `dc`.
    ///
    /// Uses the principal arccos branch, so the total flux is non-negative.
    pub fn synthesize_flux_for_f(&self, f_target: f64, dc: f64) -> Result<f64> {
        if !(f_target > 0.0) || !f_target.is_finite() {
            return Err(Error::domain(
                "target shape value must be positive",
                f_target,
            ));
        }
        self.check_dc(dc)?;
        let mut arg = f_target * cos_pi(dc);
        if arg > 1.0 {
            if arg - 1.0 <= CEILING_SLACK {
                arg = 1.0;
            } else {
                return Err(Error::OutOfRange {
                    quantity: "arccos_argument",
                    value: arg,
                    bound: 1.0,
                });
            }
        }
        let total = arg.acos() / PI;
        self.check_total(total)?;
        Ok(total - dc)
    }

    /// Verdict on simulating a signed coordinate light speed (units of `c_v`) with bias `dc`.
    pub fn feasibility_report(&self, target_speed: f64, dc: f64) -> FeasibilityReport {
        if target_speed.is_nan() {
            return FeasibilityReport::out_of_range(
                "non-finite target speed",
                LimitingQuantity::new("target_speed", target_speed, 0.0),
            );
        }
        if target_speed < 0.0 {
            return FeasibilityReport::protected(target_speed);
        }
        let max = match self.max_speed_ratio(dc) {
            Ok(max) => max,
            Err(e) => return FeasibilityReport::from_error(&e),
        };
        if target_speed > max * (1.0 + CEILING_SLACK) {
            return FeasibilityReport::out_of_range(
                "target exceeds the simulable speed ceiling",
                LimitingQuantity::new("target_speed", target_speed, max),
            );
        }
        self.feasible_shape(target_speed * target_speed, dc)
    }

    /// Like [`Self::feasibility_report`] but for a target `F`; `F < 0` asks for `c² < 0`.
    pub fn feasibility_for_shape(&self, f_target: f64, dc: f64) -> FeasibilityReport {
        if f_target < 0.0 {
            return FeasibilityReport {
                verdict: Verdict::ChronologyProtected,
                reason: "negative F requires c^2 < 0, outside the cosine dispersion".into(),
                limiting_quantity: Some(LimitingQuantity::new("f_target", f_target, 0.0)),
                ac_fraction: None,
                total_fraction: None,
                advisory: None,
            };
        }
        if let Err(e) = self.check_dc(dc) {
            return FeasibilityReport::from_error(&e);
        }
        self.feasible_shape(f_target, dc)
    }

    fn feasible_shape(&self, f_target: f64, dc: f64) -> FeasibilityReport {
        match self.synthesize_flux_for_f(f_target, dc) {
            Ok(ac) => FeasibilityReport {
                verdict: Verdict::Feasible,
                reason: "synthesized".into(),
                limiting_quantity: None,
                ac_fraction: Some(ac),
                total_fraction: Some(dc + ac),
                advisory: None,
            },
            Err(Error::Domain { value, .. }) => FeasibilityReport::out_of_range(
                "zero target needs the junction inductance to diverge",
                LimitingQuantity::new("f_target", value, 0.0),
            ),
            Err(e) => FeasibilityReport::from_error(&e),
        }
    }

    /// Verdict for driving the pulse-frame form with a current pulse.
    ///
    /// The pulse may not be faster than the unbiased line (`c₀`), and a
    /// negative pulse velocity cannot be generated.
    pub fn pulse_feasibility(&self, pulse: &PulseFrameParams) -> FeasibilityReport {
        let abs_note = (pulse.c_p < 0.0).then(|| {
            "c_p is negative; only c_p^2 enters the metric so |c_p| may be simulated instead, \
             but the pulse velocity requirement remains"
                .to_string()
        });
        if pulse.v_pulse < 0.0 {
            let mut report = FeasibilityReport::out_of_range(
                "a current pulse of negative velocity is required",
                LimitingQuantity::new("v_pulse", pulse.v_pulse, 0.0),
            );
            report.verdict = Verdict::ChronologyProtected;
            report.advisory = abs_note;
            return report;
        }
        if pulse.v_pulse > self.c0 {
            let mut report = FeasibilityReport::out_of_range(
                "pulse faster than the unbiased line speed",
                LimitingQuantity::new("v_pulse", pulse.v_pulse, self.c0),
            );
            report.advisory = abs_note;
            return report;
        }
        FeasibilityReport {
            verdict: Verdict::Feasible,
            reason: "pulse within [0, c0]".into(),
            limiting_quantity: None,
            ac_fraction: None,
            total_fraction: None,
            advisory: abs_note,
        }
    }

    /// Static flux profile reproducing the wire shape function at radii `r_values`.
    ///
    /// Stops at the first radius whose `F(r)` cannot be synthesized.
    pub fn synthesize_wire_profile(
        &self,
        wire: &WireProfile,
        dc: f64,
        r_values: impl IntoIterator<Item = f64>,
        t: f64,
    ) -> std::result::Result<FluxProfile, Box<ProfileRejection>> {
        let mut samples = Vec::new();
        for r in r_values {
            let f = shape_function(wire, r).map_err(|e| {
                Box::new(ProfileRejection {
                    r,
                    report: FeasibilityReport::from_error(&e),
                })
            })?;
            let report = self.feasibility_for_shape(f, dc);
            match (report.verdict, report.total_fraction) {
                (Verdict::Feasible, Some(total)) => samples.push(FluxSample {
                    r,
                    t,
                    phi_total_fraction: total,
                }),
                _ => return Err(Box::new(ProfileRejection { r, report })),
            }
        }
        Ok(FluxProfile { dc, samples })
    }
}

/// `φ₀ / (4π I_c cos(πφ))` in the weak-signal limit.
pub fn squid_inductance(phi_fraction: f64, critical_current: f64, phi0: f64) -> Result<f64> {
    if !(phi_fraction.abs() < HARD_FLUX_WALL) {
        return Err(Error::domain(
            "junction inductance diverges at |phi| >= phi0/2",
            phi_fraction,
        ));
    }
    if !(critical_current > 0.0) {
        return Err(Error::domain(
            "critical current must be positive",
            critical_current,
        ));
    }
    Ok(phi0 / (4.0 * PI * critical_current * cos_pi(phi_fraction)))
}

/// `sec(πφ_DC) cos(πφ)`: shape value realised by bias `dc` and total flux `total`.
pub fn shape_from_flux(dc: f64, total: f64) -> Result<f64> {
    check_phase_window(dc, total)?;
    Ok(cos_pi(total) / cos_pi(dc))
}

fn check_phase_window(dc: f64, total: f64) -> Result<()> {
    if !(dc.abs() < HARD_FLUX_WALL) {
        return Err(Error::domain("DC phase must stay inside (-pi/2, pi/2)", dc));
    }
    if !(total.abs() <= HARD_FLUX_WALL) {
        return Err(Error::domain(
            "total phase must stay inside [-pi/2, pi/2]",
            total,
        ));
    }
    Ok(())
}

/// Split `c(φ) = c(φ_DC) · c̃(φ)` into the bias speed and the dimensionless modulation.
pub fn speed_decomposition(dc: f64, total: f64, c0: f64) -> Result<(f64, f64)> {
    check_phase_window(dc, total)?;
    if !(c0 > 0.0) {
        return Err(Error::domain("zero-flux line speed must be positive", c0));
    }
    let c_dc = c0 * cos_pi(dc).sqrt();
    let c_tilde = (cos_pi(total) / cos_pi(dc)).sqrt();
    Ok((c_dc, c_tilde))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Feasible,
    ChronologyProtected,
    OutOfRange,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Feasible => "FEASIBLE",
            Verdict::ChronologyProtected => "CHRONOLOGY_PROTECTED",
            Verdict::OutOfRange => "OUT_OF_RANGE",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitingQuantity {
    pub name: String,
    pub value: f64,
    pub bound: f64,
}

impl LimitingQuantity {
    pub fn new(name: &str, value: f64, bound: f64) -> Self {
        Self {
            name: name.to_string(),
            value,
            bound,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FeasibilityReport {
    pub verdict: Verdict,
    pub reason: String,
    pub limiting_quantity: Option<LimitingQuantity>,
    /// Synthesized AC flux fraction when feasible.
    pub ac_fraction: Option<f64>,
    pub total_fraction: Option<f64>,
    pub advisory: Option<String>,
}

impl FeasibilityReport {
    fn protected(target_speed: f64) -> Self {
        Self {
            verdict: Verdict::ChronologyProtected,
            reason: "no negative effective light speed from the cosine dispersion".into(),
            limiting_quantity: Some(LimitingQuantity::new("target_speed", target_speed, 0.0)),
            ac_fraction: None,
            total_fraction: None,
            advisory: None,
        }
    }

    fn out_of_range(reason: &str, limit: LimitingQuantity) -> Self {
        Self {
            verdict: Verdict::OutOfRange,
            reason: reason.into(),
            limiting_quantity: Some(limit),
            ac_fraction: None,
            total_fraction: None,
            advisory: None,
        }
    }

    fn from_error(e: &Error) -> Self {
        let limit = match e {
            Error::OutOfRange {
                quantity,
                value,
                bound,
            } => Some(LimitingQuantity::new(quantity, *value, *bound)),
            Error::Domain { value, .. } => Some(LimitingQuantity::new("input", *value, f64::NAN)),
            _ => None,
        };
        Self {
            verdict: Verdict::OutOfRange,
            reason: e.to_string(),
            limiting_quantity: limit,
            ac_fraction: None,
            total_fraction: None,
            advisory: None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        self.verdict == Verdict::Feasible
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FluxSample {
    pub r: f64,
    pub t: f64,
    pub phi_total_fraction: f64,
}

/// DC bias plus the synthesized total flux at each sample point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FluxProfile {
    pub dc: f64,
    pub samples: Vec<FluxSample>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProfileRejection {
    pub r: f64,
    pub report: FeasibilityReport,
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn params() -> SquidArrayParams {
        SquidArrayParams::default()
    }

    const SEC_045: f64 = 6.392_453_221_499_661;

    #[test]
    fn sec_constant_matches_direct_evaluation() {
        assert_relative_eq!(1.0 / (0.45 * PI).cos(), SEC_045, max_relative = 1e-14);
    }

    #[test]
    fn inductance_examples() {
        let base = squid_inductance(0.0, 2.0, 3.0).unwrap();
        assert_relative_eq!(base, 3.0 / (8.0 * PI), max_relative = 1e-15);
        assert_relative_eq!(
            squid_inductance(1.0 / 3.0, 2.0, 3.0).unwrap(),
            3.0 / (4.0 * PI),
            max_relative = 1e-14
        );
        assert!(squid_inductance(0.5, 1.0, 1.0).is_err());
        assert!(squid_inductance(0.499_999, 1.0, 1.0).unwrap() > 1e4);
        let mut prev = 0.0;
        for i in 0..50 {
            let l = squid_inductance(i as f64 * 0.0099, 1.0, FLUX_QUANTUM).unwrap();
            assert!(l > prev);
            prev = l;
        }
    }

    #[test]
    fn line_speed_examples() {
        let p = params();
        assert_eq!(p.line_speed(0.0).unwrap(), 1.0);
        assert_relative_eq!(
            p.line_speed(1.0 / 3.0).unwrap(),
            0.5f64.sqrt(),
            max_relative = 1e-14
        );
        assert!((p.line_speed(0.45).unwrap() - 0.395517).abs() < 1e-6);
        assert!(p.line_speed(0.5).is_err());
        let strict = p.with_total_flux_limit(0.45).unwrap();
        assert!(matches!(
            strict.line_speed(0.46),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn line_speed_decreases_with_flux() {
        let p = params();
        let mut prev = f64::INFINITY;
        for i in 0..500 {
            let phi = i as f64 * 0.000_999;
            let c = p.line_speed(phi).unwrap();
            assert!(c < prev);
            assert_eq!(c, p.line_speed(-phi).unwrap());
            prev = c;
        }
    }

    #[test]
    fn dispersion_never_negative() {
        // every admissible flux, on a fine grid up to the wall
        let p = params();
        for i in -99_999..=99_999 {
            let phi = i as f64 * 0.5 / 100_000.0;
            let c = p.line_speed(phi).unwrap();
            assert!(c * c >= 0.0 && c.is_finite());
        }
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(speed_decomposition(0.0, 0.0, 1.0).unwrap(), (1.0, 1.0));
        let (c_dc, c_t) = speed_decomposition(0.45, 0.45, 1.0).unwrap();
        assert!((c_dc - 0.395517).abs() < 1e-6);
        assert_relative_eq!(c_t, 1.0, max_relative = 1e-15);
        let (c_dc, c_t) = speed_decomposition(0.45, 0.0, 1.0).unwrap();
        assert!((c_dc - 0.395517).abs() < 1e-6);
        assert_relative_eq!(c_t, SEC_045.sqrt(), max_relative = 1e-14);
        assert!((c_t - 2.52834).abs() < 1e-5);
        assert!(speed_decomposition(0.5, 0.0, 1.0).is_err());
    }

    #[test]
    fn synthesis_examples() {
        let p = params();
        assert_eq!(p.synthesize_flux_for_f(1.0, 0.0).unwrap(), 0.0);
        assert!(p.synthesize_flux_for_f(1.0, 0.3).unwrap().abs() < 1e-15);
        let ac = p.synthesize_flux_for_f(SEC_045, 0.45).unwrap();
        assert!((ac + 0.45).abs() < 1e-7, "{ac}");
        assert!(matches!(
            p.synthesize_flux_for_f(7.0, 0.45),
            Err(Error::OutOfRange {
                quantity: "arccos_argument",
                ..
            })
        ));
        assert!(matches!(
            p.synthesize_flux_for_f(1.0, 0.46),
            Err(Error::OutOfRange {
                quantity: "dc_flux_fraction",
                ..
            })
        ));
        assert!(p.synthesize_flux_for_f(-1.0, 0.45).is_err());
        let strict = p.with_total_flux_limit(0.45).unwrap();
        assert!(matches!(
            strict.synthesize_flux_for_f(0.5, 0.45),
            Err(Error::OutOfRange {
                quantity: "total_flux_fraction",
                ..
            })
        ));
    }

    #[test]
    fn max_speed_examples() {
        let p = params();
        assert_eq!(p.max_speed_ratio(0.0).unwrap(), 1.0);
        assert!((p.max_speed_ratio(0.45).unwrap() - 2.5284).abs() < 1e-4);
        assert_relative_eq!(
            p.max_speed_ratio(1.0 / 3.0).unwrap(),
            2f64.sqrt(),
            max_relative = 1e-14
        );
        assert!(p.max_speed_ratio(0.46).is_err());
    }

    #[test]
    fn feasibility_examples() {
        let p = params();
        let ok = p.feasibility_report(1.0, 0.45);
        assert_eq!(ok.verdict, Verdict::Feasible);
        assert!((ok.total_fraction.unwrap() - 0.45).abs() < 1e-12);
        assert_eq!(
            p.feasibility_report(-7.0, 0.45).verdict,
            Verdict::ChronologyProtected
        );
        let high = p.feasibility_report(3.0, 0.45);
        assert_eq!(high.verdict, Verdict::OutOfRange);
        assert_eq!(high.limiting_quantity.unwrap().name, "target_speed");
        assert_eq!(p.feasibility_report(0.0, 0.45).verdict, Verdict::OutOfRange);
        let max = p.max_speed_ratio(0.45).unwrap();
        assert!(p.feasibility_report(max, 0.45).is_feasible());
        assert_eq!(
            p.feasibility_for_shape(-1.0, 0.45).verdict,
            Verdict::ChronologyProtected
        );
    }

    #[test]
    fn subluminal_targets_need_total_flux_past_the_dc_ceiling() {
        let strict = params().with_total_flux_limit(0.45).unwrap();
        assert_eq!(
            strict.feasibility_report(0.5, 0.45).verdict,
            Verdict::OutOfRange
        );
        assert!(params().feasibility_report(0.5, 0.45).is_feasible());
    }

    #[test]
    fn pulse_feasibility_bounds() {
        let p = params();
        assert!(p
            .pulse_feasibility(&PulseFrameParams::new(1.0, 0.5))
            .is_feasible());
        assert_eq!(
            p.pulse_feasibility(&PulseFrameParams::new(1.0, 1.5))
                .verdict,
            Verdict::OutOfRange
        );
        let neg = p.pulse_feasibility(&PulseFrameParams::new(-2.909, -4.09));
        assert_eq!(neg.verdict, Verdict::ChronologyProtected);
        assert!(neg.advisory.is_some());
    }

    #[test]
    fn wire_profile_synthesis() {
        let wire = WireProfile::new(1.0, 2).unwrap();
        let radii = (1..=20).map(|i| 0.5 + i as f64 * 0.05);
        let profile = params()
            .synthesize_wire_profile(&wire, 0.45, radii, 0.0)
            .unwrap();
        assert_eq!(profile.samples.len(), 20);
        for s in &profile.samples {
            let f = shape_function(&wire, s.r).unwrap();
            assert_relative_eq!(
                shape_from_flux(0.45, s.phi_total_fraction).unwrap(),
                f,
                max_relative = 1e-12
            );
            assert!(s.phi_total_fraction.abs() <= 0.45 + 1e-12);
        }
        // deep inside the wire F outgrows the ceiling
        let rejected = params()
            .synthesize_wire_profile(&wire, 0.45, [0.9, 0.2], 0.0)
            .unwrap_err();
        assert_eq!(rejected.r, 0.2);
        assert_eq!(rejected.report.verdict, Verdict::OutOfRange);
    }

    #[test]
    fn params_validation() {
        assert!(SquidArrayParams::new(0.0, 0.45).is_err());
        assert!(SquidArrayParams::new(1.0, 0.5).is_err());
        assert!(SquidArrayParams::new(1.0, 0.0).is_err());
        assert!(params().with_total_flux_limit(0.6).is_err());
    }

    proptest! {
        #[test]
        fn decomposition_product_is_line_speed(dc in -0.45f64..0.45, total in -0.499f64..0.499) {
            let (c_dc, c_t) = speed_decomposition(dc, total, 1.7).unwrap();
            let direct = 1.7 * (PI * total).cos().sqrt();
            assert_relative_eq!(c_dc * c_t, direct, max_relative = 1e-12);
        }

        #[test]
        fn synthesis_round_trip(dc in -0.45f64..0.45, u in 0.01f64..1.0) {
            let p = params();
            let f_target = u * p.max_speed_ratio(dc).unwrap().powi(2);
            let ac = p.synthesize_flux_for_f(f_target, dc).unwrap();
            assert_relative_eq!(shape_from_flux(dc, dc + ac).unwrap(), f_target, max_relative = 1e-12);
        }
    }
}
