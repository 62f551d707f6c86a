use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input lies outside the domain where the formula is defined.
    #[error("domain error: {what} (got {value})")]
    Domain { what: &'static str, value: f64 },

    /// The formula has a pole at the requested point.
    #[error("singularity: {what}")]
    Singular { what: &'static str },

    /// A physically bounded quantity would exceed its limit.
    #[error("out of range: {quantity} = {value} exceeds bound {bound}")]
    OutOfRange {
        quantity: &'static str,
        value: f64,
        bound: f64,
    },

    /// The requested surface assembly does not encode a CTC.
    #[error("CTC condition unmet: beta {beta} must exceed threshold {threshold}")]
    CtcConditionUnmet { beta: f64, threshold: f64 },

    #[error("inconsistent assembly: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn domain(what: &'static str, value: f64) -> Self {
        Error::Domain { what, value }
    }
}
