use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by the special functions, the radius solver and the
/// majorant evaluators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum BohrError {
    #[error("{what} = {value} is outside {domain}")]
    Domain {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("pochhammer({a}, {n}) overflows the f64 range")]
    Overflow { a: f64, n: u64 },

    #[error("series failed to converge within {terms} terms")]
    NonConvergence { terms: usize },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("radius functional stays negative on [0, {upper}]; no root")]
    NoRoot { upper: f64 },

    #[error("truncation tail bound {bound:e} exceeds the budget {budget:e}")]
    TruncationInsufficient { bound: f64, budget: f64 },

    #[error("zero {0} is not strictly inside the unit disk")]
    ZeroOutsideDisk(Complex64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, BohrError>;

pub(crate) fn check_unit_interval(what: &'static str, r: f64) -> Result<()> {
    if (0.0..1.0).contains(&r) {
        Ok(())
    } else {
        Err(BohrError::Domain {
            what,
            value: r,
            domain: "[0, 1)",
        })
    }
}
