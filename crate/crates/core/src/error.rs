use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero vector has no direction")]
    ZeroVector,
    #[error("cone generators must be primitive lattice vectors")]
    NonPrimitiveGenerator,
    #[error("cone generators must be linearly independent")]
    DegenerateCone,
    #[error("HJ expansion requires value > 1")]
    ExpansionDomain,
    #[error("chain does not represent zero")]
    NotZeroChain,
    #[error("chain entries must all be at least 2")]
    ChainEntryTooSmall,
    #[error("n must be at least 2")]
    OrderTooSmall,
    #[error("q must satisfy 0 < q < n")]
    ParameterOutOfRange,
    #[error("gcd(n,q) must be 1")]
    NotCoprime,
    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("fan is not a chain of smooth cones")]
    NotSmoothChain,
    #[error("ray index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("inadmissible chain")]
    InadmissibleChain,
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Errors caused by caller input, as opposed to broken library invariants.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
