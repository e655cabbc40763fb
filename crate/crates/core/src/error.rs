use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An input lies outside the domain where the model is defined.
    #[error("domain error in {op}: {reason}")]
    Domain { op: &'static str, reason: String },

    #[error("no root of {op} in the search bracket [{lo:e}, {hi:e}]")]
    NoRoot { op: &'static str, lo: f64, hi: f64 },

    #[error("unknown scan quantity `{0}`")]
    UnknownQuantity(String),

    #[error("invalid axis `{axis}`: {reason}")]
    InvalidAxis { axis: String, reason: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(op: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            op,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Rejects non-finite values and values that fail `pred`.
pub(crate) fn ensure(
    op: &'static str,
    name: &str,
    value: f64,
    pred: impl Fn(f64) -> bool,
    expect: &str,
) -> Result<f64> {
    if value.is_finite() && pred(value) {
        Ok(value)
    } else {
        Err(Error::domain(
            op,
            format!("{name} = {value} (expected {expect})"),
        ))
    }
}

pub(crate) fn ensure_positive(op: &'static str, name: &str, value: f64) -> Result<f64> {
    ensure(op, name, value, |v| v > 0.0, "> 0")
}

pub(crate) fn ensure_non_negative(op: &'static str, name: &str, value: f64) -> Result<f64> {
    ensure(op, name, value, |v| v >= 0.0, ">= 0")
}
