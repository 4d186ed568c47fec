use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("polynomial is identically zero")]
    DegeneratePolynomial,

    #[error("polynomial product exceeds degree 4")]
    DegreeOverflow,

    #[error("x = {x} is outside the open domain ({lo}, {hi})")]
    Domain { x: f64, lo: f64, hi: f64 },

    #[error("pole at {what}")]
    Pole { what: &'static str },

    #[error("branch Second is only admissible for k = 1 (got k = {k})")]
    Branch { k: u32 },

    #[error("hypothesis not met: {0}")]
    Hypothesis(&'static str),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("degenerate Kähler class: u/v = {ratio} must exceed 1")]
    DegenerateClass { ratio: f64 },

    #[error("solution degenerates: b - a is below {tolerance} relative to a")]
    Degeneration { tolerance: f64 },

    #[error("x = {x} is within the endpoint margin {margin} of the domain")]
    Margin { x: f64, margin: f64 },

    #[error("trace-free Ricci tensor vanishes (|r0| = {norm:e}); the metric is Einstein here")]
    EinsteinPoint { norm: f64 },

    #[error("u/v = {ratio} does not exceed 9; the Second-branch pair does not exist")]
    Threshold { ratio: f64 },

    #[error("profile violates {0}")]
    Profile(&'static str),

    #[error("validation failed: {0}")]
    Validation(String),
}
