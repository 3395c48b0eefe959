use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: expected {expected}, found {found}")]
    VariableMismatch { expected: usize, found: usize },

    #[error("monomial ideal needs at least one generator; use MonomialIdeal::zero for the zero ideal")]
    EmptyGenerators,

    #[error("operation requires a nonzero ideal")]
    ZeroIdeal,

    #[error("length is not finite: count did not stabilize by degree {ceiling}")]
    NonFiniteLength { ceiling: u32 },

    #[error("interpolant has a non-integer coefficient at (k, l) = ({k}, {l})")]
    NonIntegerCoefficient { k: usize, l: usize },

    #[error("window at origin ({i0}, {j0}) is not yet polynomial of degree <= {deg_cap}")]
    NotYetPolynomial { i0: usize, j0: usize, deg_cap: usize },

    #[error("no stable polynomial window found up to origin {max_origin}")]
    NoStabilization { max_origin: usize },

    #[error("ideal is not primary to the maximal ideal")]
    NotMPrimary,

    #[error("first ideal is not contained in the second")]
    NotASubideal,

    #[error("multiplicity sequence is identically zero")]
    AllZeroSequence,

    #[error("post-verification failed: {0}")]
    VerificationFailed(String),

    #[error("window ({i0}, {j0}) with degree cap {deg_cap} does not fit inside the table")]
    WindowOutOfRange { i0: usize, j0: usize, deg_cap: usize },

    #[error("table kind mismatch: expected {expected}")]
    WrongTableKind { expected: &'static str },

    #[error("unknown variable {0:?}")]
    UnknownVariable(String),

    #[error("cell ({i}, {j}): {source}")]
    Cell {
        i: usize,
        j: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn at_cell(self, i: usize, j: usize) -> Self {
        match self {
            e @ Error::Cell { .. } => e,
            e => Error::Cell { i, j, source: Box::new(e) },
        }
    }

    /// Strips cell coordinates, returning the underlying error.
    pub fn root(&self) -> &Error {
        match self {
            Error::Cell { source, .. } => source.root(),
            e => e,
        }
    }
}
