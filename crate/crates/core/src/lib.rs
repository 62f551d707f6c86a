//! Kinematics of closed timelike curves in analogue-gravity simulators.
//!
//! Two parallel wires, one boosted, carry photons at coordinate speeds above
//! `c_v`; the loop through both can close with negative lab time. This crate
//! computes the reduced metrics and null speeds involved ([`metric`],
//! [`boost`]), the CTC conditions and region scans ([`ctc`]), whether a
//! SQUID-array transmission line can realise the required light speeds
//! ([`squid`]), and the classical scattering-surface design that can
//! ([`optics`]).

// Validation is written as `!(x > bound)` on purpose so that NaN is rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod boost;
pub mod ctc;
pub mod error;
pub mod metric;
pub mod optics;
pub mod squid;
pub mod tolerance;

pub use boost::{
    boosted_metric, horizon_condition, lorentz_transform, negative_time_condition,
    null_speed_backward, null_speed_forward, pulse_frame_params, pulse_metric, BoostParameter,
    PulseFrameParams,
};
pub use ctc::{
    classify, classify_point, ctc_threshold_beta, ctc_threshold_beta_general, round_trip_time,
    scan_figure2, scan_figure3, symmetric_beta, Axis, Fig2Row, Fig3Row, RegionLabel, ScanGrid,
};
pub use error::{Error, Result};
pub use metric::{
    axial_light_speed, axial_metric, shape_function, MetricCoefficients, TwoWireGeometry,
    WireProfile,
};
pub use optics::{
    angle_for_boosted_wire, angle_for_rest_wire, design_ctc_assembly, scatter_speed,
    simulate_wavefront, DesignMode, EventKind, ImageId, ScatterEvent, ScatterTimeline,
    SurfaceAssembly,
};
pub use squid::{
    shape_from_flux, speed_decomposition, squid_inductance, FeasibilityReport, FluxProfile,
    FluxSample, LimitingQuantity, ProfileRejection, SquidArrayParams, Verdict,
};
