use crate::complex::Face;

/// Errors raised by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("a complex needs at least one facet (use Complex::point or Complex::empty_complex)")]
    EmptyFacetList,

    #[error("{0:?} is not a face of the complex")]
    NotAFace(Face),

    #[error("vertex {0} is already in the complex")]
    VertexPresent(u32),

    #[error("complex is not pure of dimension {expected}")]
    NotPure { expected: i64 },

    #[error("characteristic {0} is neither 0 nor a prime")]
    BadCharacteristic(u32),

    #[error("subcomplex check failed: {0:?} is not a face of the ambient complex")]
    NotASubcomplex(Face),

    #[error("complex is not connected")]
    Disconnected,

    #[error("boundary face set is not downward closed at {0:?}; input is not a homology manifold")]
    BoundaryNotClosed(Face),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("vertex count {vertices} exceeds the tightness guard {guard}")]
    GuardExceeded { vertices: usize, guard: usize },

    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
