use std::path::PathBuf;

use ctcsim_core::{
    classify, ctc_threshold_beta, ctc_threshold_beta_general, design_ctc_assembly,
    null_speed_backward, round_trip_time, scan_figure2, scan_figure3, simulate_wavefront, Axis,
    BoostParameter, DesignMode, FeasibilityReport, RegionLabel, ScanGrid, SquidArrayParams,
    SurfaceAssembly, Verdict, WireProfile,
};
use serde_json::{json, Value};

use crate::format::{fmt_num, CsvTable};
use crate::{
    Command, Common, Failure, ModeArg, Outcome, OutputFormat, EXIT_INFEASIBLE, EXIT_OK,
    EXIT_VALIDATION,
};

type CmdResult = Result<Outcome, Failure>;

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_VALIDATION,
        message: message.into(),
    }
}

fn ok(body: String) -> Outcome {
    Outcome {
        body,
        code: EXIT_OK,
        note: None,
    }
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values are always serializable");
    s.push('\n');
    s
}

fn opt_num(x: Option<f64>, absent: &str) -> String {
    x.map(fmt_num).unwrap_or_else(|| absent.to_string())
}

fn csv_text(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn common(cmd: &Command) -> &Common {
    match cmd {
        Command::ScanFig2 { common, .. }
        | Command::PulseFig3 { common, .. }
        | Command::FluxProfile { common, .. }
        | Command::CtcCheck { common, .. }
        | Command::OpticsDesign { common, .. } => common,
    }
}

pub(crate) fn output_path(cmd: &Command) -> Option<PathBuf> {
    common(cmd).out.clone()
}

pub(crate) fn execute(cmd: &Command) -> CmdResult {
    let c = common(cmd);
    if !(c.c_v > 0.0 && c.c_v.is_finite()) {
        return Err(invalid(format!(
            "--c-v must be positive and finite, got {}",
            c.c_v
        )));
    }
    match cmd {
        Command::ScanFig2 {
            common,
            beta_range,
            speed_range,
            beta_steps,
            speed_steps,
            boosted_f,
        } => scan_fig2(
            common,
            *beta_range,
            *speed_range,
            *beta_steps,
            *speed_steps,
            *boosted_f,
        ),
        Command::PulseFig3 {
            common,
            beta,
            f_range,
            f_steps,
        } => pulse_fig3(common, *beta, *f_range, *f_steps),
        Command::FluxProfile {
            common,
            f_target,
            dc,
            radius,
            exponent,
            r_range,
            r_steps,
            t,
        } => match (f_target, radius) {
            (Some(f), None) => flux_record(common, *f, *dc),
            (None, Some(r)) => {
                flux_wire_profile(common, *r, *exponent, *r_range, *r_steps, *dc, *t)
            }
            _ => Err(invalid("flux-profile needs exactly one of --F or --radius")),
        },
        Command::CtcCheck {
            common,
            f1,
            f2,
            beta,
            length,
            dc,
        } => ctc_check(common, *f1, *f2, *beta, *length, *dc),
        Command::OpticsDesign {
            common,
            f1,
            f2,
            beta,
            mode,
            n_samples,
        } => optics_design(common, *f1, *f2, *beta, *mode, *n_samples),
    }
}

fn squid_params(c: &Common) -> Result<SquidArrayParams, Failure> {
    Ok(SquidArrayParams::new(c.c0, c.flux_ceiling)?.with_total_flux_limit(c.total_flux_limit)?)
}

fn scan_fig2(
    c: &Common,
    beta_range: (f64, f64),
    speed_range: (f64, f64),
    beta_steps: usize,
    speed_steps: usize,
    boosted_f: Option<f64>,
) -> CmdResult {
    let beta = Axis::new(beta_range.0, beta_range.1, beta_steps)?;
    let speed = Axis::new(speed_range.0, speed_range.1, speed_steps)?;
    let grid = ScanGrid::with_boosted_wire(beta, speed, boosted_f)?;
    let rows = scan_figure2(&grid, c.c_v)?;

    let body = match c.format.unwrap_or(OutputFormat::Csv) {
        OutputFormat::Csv => {
            let mut table = CsvTable::new(&["c_z_rest", "beta", "c_z_beta", "region"]);
            for r in &rows {
                table.row(&[
                    fmt_num(r.c_z_rest),
                    fmt_num(r.beta),
                    opt_num(r.c_z_beta.map(|s| s / c.c_v), r.region.as_str()),
                    r.region.as_str().to_string(),
                ]);
            }
            table.finish()
        }
        OutputFormat::Json => to_json(&Value::Array(
            rows.iter()
                .map(|r| {
                    json!({
                        "c_z_rest": r.c_z_rest,
                        "beta": r.beta,
                        "c_z_beta": r.c_z_beta.map(|s| s / c.c_v),
                        "region": r.region.as_str(),
                    })
                })
                .collect(),
        )),
    };
    Ok(ok(body))
}

fn pulse_fig3(c: &Common, beta: f64, f_range: (f64, f64), f_steps: usize) -> CmdResult {
    if !(0.0..1.0).contains(&beta) {
        return Err(invalid(format!(
            "--beta must satisfy 0 <= beta < 1, got {beta}"
        )));
    }
    let axis = Axis::new(f_range.0, f_range.1, f_steps)?;
    let rows = scan_figure3(beta, &axis, c.c_v)?;
    let ratio = |x: Option<f64>| x.map(|v| v / c.c_v);

    let body = match c.format.unwrap_or(OutputFormat::Csv) {
        OutputFormat::Csv => {
            let mut table = CsvTable::new(&["F", "c_p", "v_pulse", "abs_c_p", "horizon"]);
            for r in &rows {
                table.row(&[
                    fmt_num(r.f),
                    opt_num(ratio(r.c_p), "SINGULAR"),
                    opt_num(ratio(r.v_pulse), "SINGULAR"),
                    opt_num(ratio(r.abs_c_p), "SINGULAR"),
                    r.horizon.to_string(),
                ]);
            }
            table.finish()
        }
        OutputFormat::Json => to_json(&Value::Array(
            rows.iter()
                .map(|r| {
                    json!({
                        "F": r.f,
                        "c_p": ratio(r.c_p),
                        "v_pulse": ratio(r.v_pulse),
                        "abs_c_p": ratio(r.abs_c_p),
                        "horizon": r.horizon,
                    })
                })
                .collect(),
        )),
    };
    Ok(ok(body))
}

fn report_json(report: &FeasibilityReport) -> Value {
    serde_json::to_value(report).expect("reports are always serializable")
}

fn flux_record(c: &Common, f_target: f64, dc: f64) -> CmdResult {
    let params = squid_params(c)?;
    if f_target.is_nan() || dc.is_nan() {
        return Err(invalid("--F and --dc must be numbers"));
    }
    let report = params.feasibility_for_shape(f_target, dc);
    let feasible = report.is_feasible();
    let c_ratio = feasible.then(|| f_target.sqrt());

    let body = match c.format.unwrap_or(OutputFormat::Json) {
        OutputFormat::Json => to_json(&json!({
            "F_target": f_target,
            "dc": dc,
            "ac": report.ac_fraction,
            "total": report.total_fraction,
            "c_ratio": c_ratio,
            "verdict": report.verdict.as_str(),
            "reason": report.reason,
            "limiting_quantity": report.limiting_quantity,
            "advisory": report.advisory,
        })),
        OutputFormat::Csv => {
            let mut table = CsvTable::new(&[
                "F_target", "dc", "ac", "total", "c_ratio", "verdict", "reason",
            ]);
            table.row(&[
                fmt_num(f_target),
                fmt_num(dc),
                opt_num(report.ac_fraction, ""),
                opt_num(report.total_fraction, ""),
                opt_num(c_ratio, ""),
                report.verdict.as_str().to_string(),
                csv_text(&report.reason),
            ]);
            table.finish()
        }
    };
    Ok(verdict_outcome(body, &report))
}

fn verdict_outcome(body: String, report: &FeasibilityReport) -> Outcome {
    if report.is_feasible() {
        ok(body)
    } else {
        Outcome {
            body,
            code: EXIT_INFEASIBLE,
            note: Some(format!(
                "infeasible: {} ({})",
                report.verdict.as_str(),
                report.reason
            )),
        }
    }
}

fn flux_wire_profile(
    c: &Common,
    radius: f64,
    exponent: u32,
    r_range: Option<(f64, f64)>,
    r_steps: usize,
    dc: f64,
    t: f64,
) -> CmdResult {
    let params = squid_params(c)?;
    let wire = WireProfile::new(radius, exponent)?;
    let (r0, r1) = r_range.unwrap_or((0.5 * radius, 2.0 * radius));
    if r0 <= 0.0 {
        return Err(invalid(format!(
            "radial samples must be positive, got {r0}"
        )));
    }
    let axis = Axis::new(r0, r1, r_steps)?;
    let format = c.format.unwrap_or(OutputFormat::Csv);

    match params.synthesize_wire_profile(&wire, dc, axis.values(), t) {
        Ok(profile) => {
            let body = match format {
                OutputFormat::Csv => {
                    let mut table = CsvTable::new(&["r", "t", "phi_total_fraction"]);
                    for s in &profile.samples {
                        table.row(&[fmt_num(s.r), fmt_num(s.t), fmt_num(s.phi_total_fraction)]);
                    }
                    table.finish()
                }
                OutputFormat::Json => to_json(
                    &serde_json::to_value(&profile).expect("profiles are always serializable"),
                ),
            };
            Ok(ok(body))
        }
        Err(rejection) => {
            let report = &rejection.report;
            let body = match format {
                OutputFormat::Json => to_json(&json!({
                    "r": rejection.r,
                    "dc": dc,
                    "verdict": report.verdict.as_str(),
                    "reason": report.reason,
                    "limiting_quantity": report.limiting_quantity,
                })),
                OutputFormat::Csv => {
                    let mut table = CsvTable::new(&["r", "dc", "verdict", "reason"]);
                    table.row(&[
                        fmt_num(rejection.r),
                        fmt_num(dc),
                        report.verdict.as_str().to_string(),
                        csv_text(&report.reason),
                    ]);
                    table.finish()
                }
            };
            Ok(verdict_outcome(body, report))
        }
    }
}

fn assembly_json(a: &SurfaceAssembly, c_v: f64) -> Value {
    json!({
        "mode": match a.mode {
            DesignMode::Symmetric => "SYMMETRIC",
            DesignMode::AsGiven => "AS_GIVEN",
        },
        "F1": a.f1,
        "F2": a.f2,
        "beta": a.beta,
        "theta1_deg": a.theta1_degrees(),
        "theta2_deg": a.theta2_degrees(),
        "v1": a.v1 / c_v,
        "v2": a.v2 / c_v,
    })
}

fn ctc_check(c: &Common, f1: f64, f2: f64, beta: f64, length: f64, dc: f64) -> CmdResult {
    if c.format == Some(OutputFormat::Csv) {
        return Err(invalid("ctc-check writes a JSON report only"));
    }
    for (name, f) in [("F1", f1), ("F2", f2)] {
        if !(f >= 1.0 && f.is_finite()) {
            return Err(invalid(format!(
                "--{name} must be finite and >= 1, got {f}"
            )));
        }
    }
    if !(beta > 0.0 && beta < 1.0) {
        return Err(invalid(format!(
            "--beta must satisfy 0 < beta < 1, got {beta}"
        )));
    }
    if !(length > 0.0 && length.is_finite()) {
        return Err(invalid(format!("--L must be positive, got {length}")));
    }
    let params = squid_params(c)?;
    let boost = BoostParameter::new(beta)?;

    let general = ctc_threshold_beta_general(f1, f2)?;
    let equal = if f1 == f2 {
        Some(ctc_threshold_beta(f1)?)
    } else {
        None
    };
    let region = classify(f1, f2, beta);
    let loop_time = round_trip_time(length, f1, f2, boost, c.c_v).ok();
    let required = null_speed_backward(f2, boost, c.c_v)
        .ok()
        .map(|s| s / c.c_v);

    let boosted_leg = params.feasibility_report(required.unwrap_or(f64::INFINITY), dc);
    let rest_leg = params.feasibility_report(f1.sqrt(), dc);
    let classical = if region == RegionLabel::Ctc {
        design_ctc_assembly(f1, f2, Some(beta), DesignMode::AsGiven, c.c_v)
            .ok()
            .map(|a| assembly_json(&a, c.c_v))
    } else {
        None
    };

    let report = json!({
        "inputs": {
            "F1": f1,
            "F2": f2,
            "beta": beta,
            "L": length,
            "dc": dc,
            "c_v": c.c_v,
        },
        "thresholds": {
            "ctc_beta_general": general,
            "ctc_beta_equal_wires": equal,
            "negative_time_beta": 1.0 / f2.sqrt(),
        },
        "round_trip_time": loop_time,
        "region": region.as_str(),
        "required_c_z_beta": required,
        "rest_leg_c_z": f1.sqrt(),
        "verdict": boosted_leg.verdict.as_str(),
        "simulable": boosted_leg.verdict == Verdict::Feasible && rest_leg.verdict == Verdict::Feasible,
        "feasibility": {
            "boosted_leg": report_json(&boosted_leg),
            "rest_leg": report_json(&rest_leg),
        },
        "classical_assembly": classical,
    });
    Ok(ok(to_json(&report)))
}

fn optics_design(
    c: &Common,
    f1: f64,
    f2: f64,
    beta: Option<f64>,
    mode: Option<ModeArg>,
    n_samples: usize,
) -> CmdResult {
    let mode = match mode {
        Some(ModeArg::Symmetric) => DesignMode::Symmetric,
        Some(ModeArg::AsGiven) => DesignMode::AsGiven,
        None if beta.is_some() => DesignMode::AsGiven,
        None => DesignMode::Symmetric,
    };
    let note = (mode == DesignMode::Symmetric && beta.is_some())
        .then(|| "note: --beta is ignored in symmetric mode".to_string());
    let assembly = design_ctc_assembly(f1, f2, beta, mode, c.c_v)?;
    let timeline = simulate_wavefront(&assembly, n_samples)?;

    let body = match c.format.unwrap_or(OutputFormat::Json) {
        OutputFormat::Json => {
            let events: Vec<Value> = timeline
                .events
                .iter()
                .map(|e| {
                    json!({
                        "time": e.time,
                        "x": e.x,
                        "image_id": e.image_id.as_str(),
                        "kind": e.kind.as_str(),
                    })
                })
                .collect();
            to_json(&json!({
                "assembly": assembly_json(&assembly, c.c_v),
                "timeline": {
                    "meeting_x": timeline.meeting_x,
                    "meeting_time": timeline.meeting_time,
                    "left_arrival": timeline.left_arrival,
                    "right_arrival": timeline.right_arrival,
                    "meets_at_junction": timeline.meets_at_junction,
                    "events": events,
                },
            }))
        }
        OutputFormat::Csv => {
            let mut table = CsvTable::new(&["time", "x", "image_id", "kind"]);
            for e in &timeline.events {
                table.row(&[
                    fmt_num(e.time),
                    fmt_num(e.x),
                    e.image_id.as_str().to_string(),
                    e.kind.as_str().to_string(),
                ]);
            }
            table.finish()
        }
    };
    Ok(Outcome {
        body,
        code: EXIT_OK,
        note,
    })
}
