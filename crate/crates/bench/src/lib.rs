//! Workloads shared by the benchmarks.

use ctcsim_core::{Axis, ScanGrid};

/// Square `(c_z, beta)` grid with `n` points per side over the usual plotting window.
pub fn square_grid(n: usize) -> ScanGrid {
    ScanGrid::new(
        Axis::new(0.01, 0.99, n).expect("valid beta axis"),
        Axis::new(1.0, 2.5, n).expect("valid speed axis"),
    )
    .expect("valid grid")
}

/// Deterministic spread of `(F, beta)` points away from the negative-time boundary.
pub fn sample_points(n: usize) -> Vec<(f64, f64)> {
    (0..n)
        .map(|i| {
            let u = (i as f64 + 0.5) / n as f64;
            let f = 1.0 + 9.0 * u;
            let beta = (0.05 + 0.9 * ((i * 7919) % n) as f64 / n as f64).min(0.95);
            (f, beta)
        })
        .filter(|(f, beta)| (f.sqrt() * beta - 1.0).abs() > 1e-6)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn workloads_have_expected_size() {
        assert_eq!(square_grid(10).len(), 100);
        let pts = sample_points(500);
        assert!(pts.len() > 490);
        assert!(pts
            .iter()
            .all(|&(f, b)| (1.0..=10.0).contains(&f) && b > 0.0 && b < 1.0));
    }
}
