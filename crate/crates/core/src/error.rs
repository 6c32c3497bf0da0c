use thiserror::Error;

/// Errors raised by the library.
///
/// Variants split into input problems (bad syntax, mismatched shapes) and
/// mathematical failures (a precondition of a construction does not hold);
/// see [`Error::is_mathematical`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group mismatch: {0}")]
    GroupMismatch(String),

    #[error("unsupported grading: {0}")]
    UnsupportedGrading(String),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("algebra is not Artinian: {0}")]
    NotArtinian(String),

    #[error("degree {0} is not a maximal element of the support")]
    NotMaximal(String),

    #[error("top degree slice must be one-dimensional, found dimension {0}")]
    TopSliceDimension(usize),

    #[error("no greatest element in the support")]
    NoGreatestElement,

    #[error("degenerate pairing: {0}")]
    DegeneratePairing(String),

    #[error("polynomial lies in the ideal")]
    InIdeal,

    #[error("linear element is not phi-linear: phi(deg L) = {0}")]
    NotPhiLinear(String),

    #[error("identity not applicable: {0}")]
    IdentityNotApplicable(String),

    #[error("degenerate grading: {0}")]
    DegenerateGrading(String),

    #[error("polyhedron is empty")]
    EmptyPolyhedron,

    #[error("no torus-invariant representative: {0}")]
    NoRepresentative(String),

    #[error("fan is not complete")]
    NonCompleteFan,
}

impl Error {
    /// True when the failure is a mathematical property of valid input
    /// (as opposed to malformed or mismatched input).
    pub fn is_mathematical(&self) -> bool {
        !matches!(
            self,
            Error::GroupMismatch(_)
                | Error::RingMismatch(_)
                | Error::Parse { .. }
                | Error::Invalid(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
