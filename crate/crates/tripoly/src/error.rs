use crate::poly::BasisTag;

/// Errors raised across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("basis mismatch: {left} vs {right}")]
    BasisMismatch { left: BasisTag, right: BasisTag },

    #[error("{op} does not accept a polynomial in basis {found}")]
    WrongBasis { op: &'static str, found: BasisTag },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("points {0}, {1} and {2} are collinear")]
    Degenerate(usize, usize, usize),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("expression is not a chain")]
    NotAChain,

    #[error("not a near-edge: {0}")]
    NotNearEdge(String),

    #[error("invalid floor: {0}")]
    InvalidFloor(String),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("transform length {len} exceeds the maximum {max} supported by the modulus")]
    TransformLength { len: usize, max: usize },

    #[error("order-type database: {0}")]
    DbFormat(String),

    #[error("record {index}: points {} {} {} are collinear", triple.0, triple.1, triple.2)]
    DegenerateRecord { index: u64, triple: (usize, usize, usize) },

    #[error("realization failed: {0}")]
    Realization(String),

    #[error("checkpoint: {0}")]
    Checkpoint(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
