use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Failure modes shared by every module.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the mathematical domain of an operation.
    Domain { what: &'static str, value: f64 },
    /// An intermediate quantity left the representable floating-point range.
    Overflow { what: &'static str },
    /// An iterative method failed to converge within its iteration budget.
    NoConvergence { what: &'static str },
    /// A sign-change scan failed to isolate a root.
    Bracket { what: &'static str, order: f64, index: usize },
    /// A request needs Bessel orders or arguments beyond the validated range.
    OutOfEnvelope { what: &'static str, value: f64, limit: f64 },
    /// Not enough data points for a stable fit.
    InsufficientData { needed: usize, got: usize },
    /// A requested state does not exist for the chosen geometry.
    NoSuchState { what: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { what, value } => write!(f, "{what}: argument {value} is out of domain"),
            Error::Overflow { what } => write!(f, "{what}: floating-point overflow"),
            Error::NoConvergence { what } => write!(f, "{what}: iteration did not converge"),
            Error::Bracket { what, order, index } => {
                write!(f, "{what}: could not bracket root {index} for order {order}")
            }
            Error::OutOfEnvelope { what, value, limit } => {
                write!(f, "{what} = {value} exceeds the validated limit {limit}")
            }
            Error::InsufficientData { needed, got } => {
                write!(f, "need at least {needed} levels for a fit, got {got}")
            }
            Error::NoSuchState { what } => write!(f, "no such state: {what}"),
        }
    }
}

impl core::error::Error for Error {}
