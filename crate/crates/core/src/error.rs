use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by the library.
///
/// The CLI maps [`Error::Parse`] and [`Error::Json`] to exit status 2 and
/// everything else to exit status 1.
#[derive(Debug, Error)]
pub enum Error {
    #[error("determinant must be 1, got {det}")]
    Determinant { det: BigInt },

    #[error("matrix is not in the derived subgroup (abelianized class {class} mod 12, expected 0)")]
    NotInDerivedSubgroup { class: u8 },

    #[error("point is not in the upper half-plane (im = {im})")]
    NotInUpperHalfPlane { im: f64 },

    #[error("reduction did not converge within {iterations} steps; tolerance too tight")]
    ReductionBudget { iterations: usize },

    #[error("parse error at token {index} ({token:?}, byte {offset}): {reason}")]
    Parse {
        token: String,
        index: usize,
        offset: usize,
        reason: String,
    },

    #[error("invalid JSON input: {0}")]
    Json(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(token: &str, index: usize, offset: usize, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.to_string(),
            index,
            offset,
            reason: reason.into(),
        }
    }

    /// True for malformed input, as opposed to well-formed input that violates
    /// a mathematical precondition.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::Json(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
