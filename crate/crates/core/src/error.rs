use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the pipeline can report. Variants are grouped by how the
/// CLI maps them onto exit codes; see [`Error::kind`].
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid Cartan type: {0}")]
    InvalidCartanType(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("Weyl length {requested} out of range 0..={max}")]
    LengthOutOfRange { requested: usize, max: usize },
    #[error("weight is not dominant integral: {0}")]
    NonDominant(String),
    #[error("t is not contained in k")]
    TNotInK,
    #[error("t is not contained in the standard Cartan subalgebra")]
    TNotInCartan,
    #[error("t is not a Cartan subalgebra of k: {0}")]
    TNotCartan(String),
    #[error("subalgebra is not reductive in g: {0}")]
    NotReductive(String),
    #[error("weight context mismatch: {0}")]
    ContextMismatch(String),
    #[error("invalid input: {0}")]
    InputInvalid(String),
    #[error("certificate input digest does not match the supplied input")]
    HashMismatch,

    #[error("search space too large: {0}")]
    SearchTooLarge(String),
    #[error("module dimension {dim} exceeds cap {cap}")]
    DimCapExceeded { dim: u128, cap: usize },

    #[error("no regular element found with height <= {0}")]
    NoRegularFound(u32),
    #[error("no generic weight found within the search bounds")]
    NotFound,

    #[error("ad h has irrational spectrum")]
    IrrationalSpectrum,
    #[error("ad h is not diagonalizable")]
    NonDiagonalizable,
    #[error("Killing form restricted to k is degenerate")]
    DegenerateRestriction,
    #[error("Killing form restricted to t is degenerate")]
    DegenerateOnT,
    #[error("subspace is not ad t-invariant")]
    NotTInvariant,
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("cochain complex inconsistent: {0}")]
    ComplexInconsistent(String),
    #[error("not an m-character: {0}")]
    NotAnMCharacter(String),
    #[error("k contains every simple ideal of g")]
    ReducedToZero,

    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },
}

/// Coarse classification used for exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Input,
    Cap,
    Search,
    Internal,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            InvalidCartanType(_) | DimensionMismatch { .. } | LengthOutOfRange { .. }
            | NonDominant(_) | TNotInK | TNotInCartan | TNotCartan(_) | NotReductive(_)
            | ContextMismatch(_) | InputInvalid(_) | HashMismatch => ErrorKind::Input,
            SearchTooLarge(_) | DimCapExceeded { .. } => ErrorKind::Cap,
            NoRegularFound(_) | NotFound => ErrorKind::Search,
            IrrationalSpectrum | NonDiagonalizable | DegenerateRestriction | DegenerateOnT
            | NotTInvariant | InvariantViolation(_) | ComplexInconsistent(_)
            | NotAnMCharacter(_) | ReducedToZero => ErrorKind::Internal,
            Stage { source, .. } => source.kind(),
        }
    }

    /// Strips any stage wrappers.
    pub fn root(&self) -> &Error {
        match self {
            Error::Stage { source, .. } => source.root(),
            e => e,
        }
    }

    pub(crate) fn at(stage: &'static str) -> impl FnOnce(Error) -> Error {
        move |e| Error::Stage { stage, source: Box::new(e) }
    }
}
