use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("generator `{0}` cannot be the adjoint of `{1}`")]
    BadAdjointPairing(String, String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator `{0}` has no assigned image")]
    Unassigned(String),
    #[error("elements belong to different algebras: {0} vs {1}")]
    OwnerMismatch(String, String),
    #[error("invalid structure constants: {0}")]
    InvalidStructure(String),
    #[error("index {index} out of range (size {size})")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("free product needs at least one factor")]
    EmptyFactorList,
    #[error("tensor product needs at least one leg")]
    EmptyLegList,
    #[error("unsupported free-product factor: {0}")]
    UnsupportedFactor(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("{0}")]
    Other(String),
}
