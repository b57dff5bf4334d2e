use thiserror::Error;

use crate::ring::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ring order must be at least 1")]
    EmptyRing,

    #[error("ring order {order} exceeds the configured maximum of {max}")]
    TooLarge { order: u128, max: usize },

    #[error("malformed table: {0}")]
    Shape(String),

    #[error("ring axioms violated: {}", .0.summary())]
    Axioms(ValidationReport),

    #[error("not power-associative: x^{i} * x^{j} != x^{} for x = {x}", .i + .j)]
    NotPowerAssociative { x: usize, i: usize, j: usize },

    #[error("{op} requires an associative ring")]
    NotAssociative { op: &'static str },

    #[error("{op} requires a commutative ring")]
    NotCommutative { op: &'static str },

    #[error("a quotient ring needs a two-sided ideal; use a coset view for one-sided ideals")]
    OneSidedQuotient,

    #[error("element {index} is out of range for a ring of order {order}")]
    OutOfRange { index: usize, order: usize },

    #[error("exponent must be at least 1")]
    ZeroExponent,

    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),

    #[error("element {0} of the target has no preimage")]
    NoPreimage(usize),

    #[error("x*x - x = {residue} is not in the ideal (x = {x})")]
    NotCosetIdempotent { x: usize, residue: usize },

    #[error("x*y*x - x = {residue} is not in the ideal (x = {x}, y = {y})")]
    NotRegularModIdeal { x: usize, y: usize, residue: usize },

    #[error("map is not a ring homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("objects belong to different rings ({expected} vs {found})")]
    RingMismatch { expected: String, found: String },

    #[error("invalid ideal: {0}")]
    InvalidIdeal(String),

    #[error("invalid clique: {0}")]
    InvalidClique(String),

    #[error("power sequence of {0} did not close within the step bound")]
    Unterminated(usize),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Errors that signal an operation unavailable for this kind of ring.
    pub fn is_capability(&self) -> bool {
        matches!(
            self,
            Error::NotAssociative { .. } | Error::NotCommutative { .. } | Error::OneSidedQuotient
        )
    }
}
