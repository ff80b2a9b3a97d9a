use thiserror::Error;

/// Domain errors raised by the library.
///
/// Vertex indices and factor indices carried by the variants are 1-based,
/// matching the vertex set `{1, ..., m}` used on every public interface.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} appears in no simplex")]
    GhostVertex(usize),
    #[error("vertex {vertex} is outside [1, {m}]")]
    InvalidVertex { vertex: usize, m: usize },
    #[error("a complex needs at least one vertex")]
    NoVertices,
    #[error("{0} vertices exceeds the supported maximum of {max}", max = crate::complex::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("edge {{{0}, {1}}} listed more than once")]
    DuplicateEdge(usize, usize),
    #[error("edge joins vertex {0} to itself")]
    SelfLoop(usize),
    #[error("expected {expected} entries, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("product of monomials sharing variable t_{0} is not multilinear")]
    SharedVariable(usize),
    #[error("q_{0} must be at least 1")]
    NonPositiveQ(usize),
    #[error("boundary Euler characteristic at factor {0} is odd")]
    OddBoundaryEuler(usize),
    #[error("top degree d = {0} is odd")]
    OddD(usize),
    #[error("factor {0} violates (-1)^k * chi(boundary) >= 0")]
    HypothesisViolated(usize),
    #[error("complex is not a flag complex")]
    NotFlag,
    #[error("group {0} has order 1")]
    TrivialFactor(usize),
    #[error("group {0} has the wrong kind for this formula")]
    UnexpectedGroupKind(usize),
    #[error("cell model {0} has no cells")]
    EmptyModel(usize),
    #[error("enumeration needs {tuples} cell tuples, budget is {budget}")]
    InstanceTooLarge { tuples: u128, budget: u128 },
}

impl Error {
    /// Stable variant name, used by front ends when reporting errors.
    pub fn name(&self) -> &'static str {
        match self {
            Error::GhostVertex(_) => "GhostVertex",
            Error::InvalidVertex { .. } => "InvalidVertex",
            Error::NoVertices => "NoVertices",
            Error::TooManyVertices(_) => "TooManyVertices",
            Error::DuplicateEdge(..) => "DuplicateEdge",
            Error::SelfLoop(_) => "SelfLoop",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::SharedVariable(_) => "SharedVariable",
            Error::NonPositiveQ(_) => "NonPositiveQ",
            Error::OddBoundaryEuler(_) => "OddBoundaryEuler",
            Error::OddD(_) => "OddD",
            Error::HypothesisViolated(_) => "HypothesisViolated",
            Error::NotFlag => "NotFlag",
            Error::TrivialFactor(_) => "TrivialFactor",
            Error::UnexpectedGroupKind(_) => "UnexpectedGroupKind",
            Error::EmptyModel(_) => "EmptyModel",
            Error::InstanceTooLarge { .. } => "InstanceTooLarge",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
