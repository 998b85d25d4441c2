use thiserror::Error;

/// Errors raised by the library.
///
/// Every variant belongs to one of two classes, see [`Error::is_hypothesis_violation`]:
/// malformed or unsuitable input, or input that is well formed but fails a
/// hypothesis of the topological statement being evaluated.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("closure has {0} components; a knot (1 component) is required")]
    MultiComponent(usize),
    #[error("invalid braid word: {0}")]
    InvalidBraid(String),
    #[error("invalid front word: {0}")]
    InvalidFront(String),
    #[error("boundary maps do not compose to zero: d{degree} . d{next} != 0", next = .degree + 1)]
    NotAComplex { degree: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("vector has a nonzero torsion coordinate at index {0}")]
    TorsionCoordinate(usize),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("not the homology of a closed oriented 3-manifold: {0}")]
    NotClosed3Manifold(String),
    #[error("classes are expressed in different bases ({0} vs {1})")]
    BasisMismatch(String, String),
    #[error("unknown catalog id `{0}`")]
    UnknownId(String),
    #[error("malformed input: {0}")]
    Format(String),
    #[error("computation cancelled")]
    Cancelled,
}

impl Error {
    /// True for failures of a lemma's hypotheses rather than of input validity.
    pub fn is_hypothesis_violation(&self) -> bool {
        matches!(self, Error::HypothesisViolated(_) | Error::NotClosed3Manifold(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
