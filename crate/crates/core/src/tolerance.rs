//! Comparison tolerances shared across modules.

/// Relative tolerance for region-boundary comparisons and pole detection.
pub const REL_TOL: f64 = 1e-12;

/// Band around `sqrt(F) * beta = 1` labelled singular in scans.
pub const SINGULAR_TOL: f64 = 1e-9;

/// Default relative tolerance for the pulse-frame horizon test.
pub const HORIZON_TOL: f64 = 1e-9;

/// `|a - b| <= tol * max(|a|, |b|)`; exact zero compares equal to zero.
pub fn rel_eq(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs())
}
