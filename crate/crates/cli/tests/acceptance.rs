//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Oracles are written out inline from the closed forms so that they do not
//! share code paths with the library under test. Random draws come from a
//! fixed-seed ChaCha stream, so every run checks the same points.

use std::process::Command;

use ctcsim_core::{
    angle_for_boosted_wire, classify_point, ctc_threshold_beta, ctc_threshold_beta_general,
    design_ctc_assembly, null_speed_backward, null_speed_forward, pulse_frame_params, pulse_metric,
    round_trip_time, scan_figure2, scan_figure3, scatter_speed, shape_from_flux,
    simulate_wavefront, symmetric_beta, Axis, BoostParameter, DesignMode, RegionLabel, ScanGrid,
    SquidArrayParams, Verdict,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_c7c5;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn rel_err(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}

fn boost(beta: f64) -> BoostParameter {
    BoostParameter::new(beta).expect("subluminal boost")
}

fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(stream);
    r
}

/// Open-interval draw on (lo, hi).
fn open(r: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    loop {
        let x = r.gen_range(lo..hi);
        if x > lo {
            return x;
        }
    }
}

fn simulable_ceiling() -> Check {
    let params = SquidArrayParams::default();
    let m = params.max_speed_ratio(0.45).map_err(|e| e.to_string())?;
    let oracle = 1.0 / (0.45 * std::f64::consts::PI).cos().sqrt();
    if !(2.45..=2.55).contains(&m) {
        return Err(format!("max_speed_ratio(0.45) = {m} outside [2.45, 2.55]"));
    }
    if rel_err(m, oracle) > 1e-12 {
        return Err(format!("max_speed_ratio(0.45) = {m}, closed form {oracle}"));
    }
    // the quoted 2.5284 is a rounded figure; the closed form is 2.528330...
    if (m - 2.5284).abs() > 1e-4 {
        return Err(format!("{m} is not within 1e-4 of the quoted 2.5284"));
    }
    Ok(format!(
        "max_speed_ratio(0.45) = {m:.7}, in [2.45, 2.55], matches sqrt(sec(0.45 pi)) to 1e-12"
    ))
}

fn threshold_identity() -> Check {
    let mut r = rng(2);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let f: f64 = r.gen_range(1.0..=10.0);
        let g = ctc_threshold_beta_general(f, f).map_err(|e| e.to_string())?;
        let e = ctc_threshold_beta(f).map_err(|e| e.to_string())?;
        let err = rel_err(g, e);
        if err > 1e-12 {
            return Err(format!(
                "F = {f}: general {g} vs equal-wire {e} (rel {err:e})"
            ));
        }
        worst = worst.max(err);
    }
    Ok(format!(
        "1000 draws of F in [1, 10], worst relative difference {worst:.1e}"
    ))
}

/// Region implied by the loop time and the return-leg sign alone.
fn brute_force_label(c: f64, beta: f64) -> RegionLabel {
    let f = c * c;
    let t = round_trip_time(1.0, f, f, boost(beta), 1.0).expect("non-singular point");
    let back = null_speed_backward(f, boost(beta), 1.0).expect("non-singular point");
    if t < 0.0 {
        RegionLabel::Ctc
    } else if back < 0.0 {
        RegionLabel::NegativeLeg
    } else {
        RegionLabel::PositiveTime
    }
}

fn figure2_grid() -> ScanGrid {
    ScanGrid::new(
        Axis::new(0.0025, 0.9975, 200).unwrap(),
        Axis::new(1.0, 2.5, 200).unwrap(),
    )
    .unwrap()
}

fn region_oracle() -> Check {
    let grid = figure2_grid();
    let rows = scan_figure2(&grid, 1.0).map_err(|e| e.to_string())?;
    let mut checked = 0usize;
    for row in &rows {
        let direct = classify_point(row.c_z_rest, row.beta);
        if direct != row.region {
            return Err(format!("scan and classify_point disagree at {row:?}"));
        }
        if direct == RegionLabel::Singular {
            continue;
        }
        let oracle = brute_force_label(row.c_z_rest, row.beta);
        if oracle != direct {
            return Err(format!(
                "c_z = {}, beta = {}: classify_point {direct}, brute force {oracle}",
                row.c_z_rest, row.beta
            ));
        }
        checked += 1;
    }
    if checked < 10_000 {
        return Err(format!("only {checked} non-singular points"));
    }
    Ok(format!(
        "{checked} of {} grid points agree (singular points skipped)",
        rows.len()
    ))
}

fn ctc_negative_target() -> Check {
    let rows = scan_figure2(&figure2_grid(), 1.0).map_err(|e| e.to_string())?;
    let mut ctc = 0usize;
    for row in rows.iter().filter(|r| r.region == RegionLabel::Ctc) {
        let (c, b) = (row.c_z_rest, row.beta);
        let oracle = (c - b) / (1.0 - c * b);
        match row.c_z_beta {
            Some(s) if s < 0.0 && oracle < 0.0 => ctc += 1,
            other => {
                return Err(format!(
                    "CTC point c_z = {c}, beta = {b} has c_z_beta {other:?}"
                ))
            }
        }
    }
    if ctc == 0 {
        return Err("no CTC points on the grid".into());
    }
    Ok(format!("all {ctc} CTC grid points have c_z_beta < 0"))
}

fn chronology_protection() -> Check {
    let params = SquidArrayParams::default();
    let dc = 0.45;
    let mut r = rng(5);

    let mut protected = 0;
    while protected < 1000 {
        let c = r.gen_range(1.0..=2.5);
        let beta = open(&mut r, 0.0, 1.0);
        if classify_point(c, beta) != RegionLabel::Ctc {
            continue;
        }
        let target = null_speed_backward(c * c, boost(beta), 1.0).map_err(|e| e.to_string())?;
        let report = params.feasibility_report(target, dc);
        if report.verdict != Verdict::ChronologyProtected {
            return Err(format!(
                "target {target} at (c_z {c}, beta {beta}) got {:?}",
                report.verdict
            ));
        }
        protected += 1;
    }

    let max = params.max_speed_ratio(dc).map_err(|e| e.to_string())?;
    let mut targets: Vec<f64> = (0..1000).map(|_| open(&mut r, 0.0, max)).collect();
    targets.extend([1e-6, 1e-3, 1.0, max]);
    for &target in &targets {
        let report = params.feasibility_report(target, dc);
        if report.verdict != Verdict::Feasible {
            return Err(format!(
                "target {target} (max {max}) got {:?}: {}",
                report.verdict, report.reason
            ));
        }
    }
    Ok(format!(
        "{protected} CTC targets CHRONOLOGY_PROTECTED; {} targets in (0, {max:.6}] FEASIBLE",
        targets.len()
    ))
}

fn metric_form_equivalence() -> Check {
    // hand-checked anchor
    let anchor = pulse_frame_params(4.0, boost(0.3), 1.0).map_err(|e| e.to_string())?;
    let fwd = anchor.c_p - anchor.v_pulse;
    if rel_err(fwd, 1.4375) > 1e-12 {
        return Err(format!(
            "anchor F = 4, beta = 0.3: c_p - v = {fwd}, expected 1.4375"
        ));
    }

    let mut r = rng(6);
    let mut worst = 0.0f64;
    let mut n = 0;
    while n < 1000 {
        let f: f64 = r.gen_range(1.0..=10.0);
        let beta = open(&mut r, 0.0, 1.0);
        if (f * beta * beta - 1.0).abs() <= 1e-6 {
            continue;
        }
        let p = pulse_frame_params(f, boost(beta), 1.0).map_err(|e| e.to_string())?;
        let [lo, hi] = pulse_metric(&p).null_speeds().map_err(|e| e.to_string())?;

        let s = f.sqrt();
        let forward = (beta + s) / (1.0 + s * beta);
        let backward = (s - beta) / (1.0 - s * beta);
        let lib_forward = null_speed_forward(f, boost(beta), 1.0).map_err(|e| e.to_string())?;
        let lib_backward = null_speed_backward(f, boost(beta), 1.0).map_err(|e| e.to_string())?;

        // The forward photon has dz/dt = c_p - v; the counter-moving one has dz/dt = -(c_p + v).
        let mut expected = [forward, -backward];
        expected.sort_by(f64::total_cmp);
        let errs = [
            rel_err(lo, expected[0]),
            rel_err(hi, expected[1]),
            rel_err(p.c_p - p.v_pulse, forward),
            rel_err(p.c_p + p.v_pulse, backward),
            rel_err(lib_forward, forward),
            rel_err(lib_backward, backward),
        ];
        let e = errs.iter().cloned().fold(0.0, f64::max);
        if e > 1e-12 {
            return Err(format!(
                "F = {f}, beta = {beta}: relative error {e:e} ({errs:?})"
            ));
        }
        worst = worst.max(e);
        n += 1;
    }
    Ok(format!(
        "anchor c_p - v = 1.4375; 1000 draws, worst relative error {worst:.1e}"
    ))
}

fn horizon_locus() -> Check {
    let axis = Axis::new(1.0, 7.0, 601).unwrap();
    let rows = scan_figure3(0.6, &axis, 1.0).map_err(|e| e.to_string())?;
    let flips: Vec<usize> = (1..rows.len())
        .filter(|&i| rows[i].horizon != rows[i - 1].horizon)
        .collect();
    let locus = 25.0 / 9.0;
    match flips.as_slice() {
        [i] if !rows[*i - 1].horizon && rows[*i].horizon => {
            let f = rows[*i].f;
            if (f - locus).abs() <= axis.step() {
                Ok(format!(
                    "horizon switches on at F = {f} (25/9 = {locus:.6}, step {})",
                    axis.step()
                ))
            } else {
                Err(format!(
                    "horizon switches on at F = {f}, more than one step from {locus}"
                ))
            }
        }
        _ => Err(format!(
            "expected one off-to-on transition, found flips at {flips:?}"
        )),
    }
}

fn flux_round_trip() -> Check {
    let params = SquidArrayParams::default();
    let mut r = rng(8);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let dc = r.gen_range(-0.45..=0.45);
        let f_max = 1.0 / (dc * std::f64::consts::PI).cos();
        let f = open(&mut r, 0.0, f_max);
        let ac = params
            .synthesize_flux_for_f(f, dc)
            .map_err(|e| format!("F = {f}, dc = {dc}: {e}"))?;
        let back = shape_from_flux(dc, dc + ac).map_err(|e| e.to_string())?;
        let err = rel_err(back, f);
        if err > 1e-12 {
            return Err(format!(
                "F = {f}, dc = {dc}: recovered {back} (rel {err:e})"
            ));
        }
        worst = worst.max(err);
    }
    Ok(format!(
        "1000 feasible (F, dc) draws, worst relative error {worst:.1e}"
    ))
}

fn optics_inverse() -> Check {
    let mut r = rng(9);
    let mut worst = 0.0f64;
    let (mut lo_deg, mut hi_deg) = (f64::INFINITY, f64::NEG_INFINITY);
    let mut n = 0;
    while n < 1000 {
        let f: f64 = r.gen_range(1.0..=10.0);
        let beta = open(&mut r, 0.0, 1.0);
        let s = f.sqrt();
        if classify_point(s, beta) == RegionLabel::Singular || (s - beta).abs() < 1e-12 {
            continue;
        }
        let theta = angle_for_boosted_wire(f, boost(beta)).map_err(|e| e.to_string())?;
        let speed = scatter_speed(theta, 1.0).map_err(|e| e.to_string())?;
        let oracle = (s - beta) / (1.0 - s * beta);
        let err = rel_err(speed, oracle);
        if err > 1e-10 {
            return Err(format!(
                "F = {f}, beta = {beta}: spot speed {speed}, wire {oracle} (rel {err:e})"
            ));
        }
        let deg = theta.to_degrees();
        if !(deg > 26.5 && deg <= 90.0) {
            return Err(format!("angle {deg} deg outside (26.5, 90]"));
        }
        worst = worst.max(err);
        lo_deg = lo_deg.min(deg);
        hi_deg = hi_deg.max(deg);
        n += 1;
    }
    let mut boundary = 0.0f64;
    for f in [1.5, 2.0, 4.0, 6.25, 9.0] {
        let beta = 1.0 / f64::sqrt(f);
        let deg = angle_for_boosted_wire(f, boost(beta))
            .map_err(|e| e.to_string())?
            .to_degrees();
        boundary = boundary.max((deg - 45.0).abs());
    }
    if boundary > 1e-9 {
        return Err(format!(
            "boundary sqrt(F) beta = 1 maps {boundary:e} deg away from 45"
        ));
    }
    Ok(format!(
        "1000 draws, worst relative error {worst:.1e}; angles in [{lo_deg:.3}, {hi_deg:.3}] deg; boundary within {boundary:.1e} deg of 45"
    ))
}

fn symmetric_assembly() -> Check {
    let exact = 20.0 / 29.0;
    let beta = symmetric_beta(6.25, 6.25).map_err(|e| e.to_string())?;
    let a = design_ctc_assembly(6.25, 6.25, None, DesignMode::Symmetric, 1.0)
        .map_err(|e| e.to_string())?;
    if (beta - exact).abs() > 1e-9 || (a.beta - exact).abs() > 1e-9 {
        return Err(format!(
            "symmetric beta {} vs threshold 20/29 = {exact}",
            a.beta
        ));
    }
    if (a.beta - 0.68966).abs() > 5e-6 {
        return Err(format!("beta {} does not round to 0.68966", a.beta));
    }
    let t = round_trip_time(1.0, 6.25, 6.25, boost(a.beta), 1.0).map_err(|e| e.to_string())?;
    if t.abs() > 1e-9 {
        return Err(format!("round trip time at the symmetric boost is {t}"));
    }
    if (a.theta1_degrees() - 59.036).abs() > 1e-3 {
        return Err(format!("theta1 = {} deg", a.theta1_degrees()));
    }
    let tl = simulate_wavefront(&a, 11).map_err(|e| e.to_string())?;
    let dt = (tl.left_arrival - tl.right_arrival).abs();
    if (tl.meeting_x - 0.5).abs() > 1e-9 || dt > 1e-9 * tl.meeting_time {
        return Err(format!(
            "annihilation at x = {}, arrival gap {dt}",
            tl.meeting_x
        ));
    }
    Ok(format!(
        "beta = {:.9} (20/29, printed 0.68966), theta1 = {:.4} deg, annihilation at x = {} with arrival gap {dt:.1e}",
        a.beta,
        a.theta1_degrees(),
        tl.meeting_x
    ))
}

fn determinism() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for name in ["first.csv", "second.csv"] {
        let path = dir.path().join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_ctcsim"))
            .args(["scan-fig2", "--out"])
            .arg(&path)
            .status()
            .map_err(|e| e.to_string())?;
        if !status.success() {
            return Err(format!("scan-fig2 exited with {status}"));
        }
        outputs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    if outputs[0] != outputs[1] {
        return Err("two scan-fig2 runs differ".into());
    }
    let lines = outputs[0].iter().filter(|&&b| b == b'\n').count();
    Ok(format!(
        "two default scan-fig2 runs byte-identical ({} bytes, {lines} lines)",
        outputs[0].len()
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("simulable ceiling", simulable_ceiling),
        ("threshold identity", threshold_identity),
        ("region oracle", region_oracle),
        ("CTC implies negative target", ctc_negative_target),
        ("chronology protection", chronology_protection),
        ("metric-form equivalence", metric_form_equivalence),
        ("horizon locus", horizon_locus),
        ("flux synthesis round trip", flux_round_trip),
        ("optics inverse", optics_inverse),
        ("symmetric assembly", symmetric_assembly),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let result = check();
        let ms = start.elapsed().as_secs_f64() * 1e3;
        match result {
            Ok(detail) => println!("PASS  {:>2}. {name}: {detail} [{ms:.0} ms]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {:>2}. {name}: {detail} [{ms:.0} ms]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
