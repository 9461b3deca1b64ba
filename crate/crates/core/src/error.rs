use thiserror::Error;

/// Every failure the library can report.
///
/// Construction and formula errors are split by cause so that callers (the
/// CLI in particular) can tell a malformed input from a parameter that lies
/// outside the range where a construction or bound is defined.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("uniformity must be at least 2, got {0}")]
    InvalidUniformity(usize),

    #[error("edge {edge:?} does not have exactly {k} distinct vertices")]
    EdgeWrongSize { edge: Vec<usize>, k: usize },

    #[error("vertex {vertex} is out of range for a hypergraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge {0:?} appears more than once")]
    DuplicateEdge(Vec<usize>),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("uniformity {0} is not supported for this construction")]
    UnsupportedUniformity(usize),

    #[error("path order {m} is too small for uniformity {k} (need m >= {min})")]
    OrderTooSmall { k: usize, m: usize, min: usize },

    #[error("too few vertices: n = {n}, need {requirement}")]
    TooFewVertices { n: usize, requirement: String },

    #[error("parameters outside the supported regime: {0}")]
    ParameterRegime(String),

    #[error("construction is not specified for these parameters: {0}")]
    UnspecifiedConstruction(String),

    #[error("arithmetic overflow while evaluating {0}")]
    Overflow(&'static str),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Guard and regime errors, as opposed to malformed input.
    pub fn is_guard(&self) -> bool {
        matches!(
            self,
            Error::TooLarge(_)
                | Error::UnsupportedUniformity(_)
                | Error::OrderTooSmall { .. }
                | Error::TooFewVertices { .. }
                | Error::ParameterRegime(_)
                | Error::UnspecifiedConstruction(_)
                | Error::Overflow(_)
        )
    }
}
