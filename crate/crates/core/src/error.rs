use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("arity {n} outside the supported range 1..={max}")]
    ArityOutOfRange { n: usize, max: usize },

    #[error("coordinate bits {bits:#x} do not fit arity {n}")]
    PointOutOfRange { n: usize, bits: u64 },

    #[error(
        "capacity exceeded for n = {n} (limit {limit}): would materialize {projected} objects"
    )]
    Capacity {
        n: usize,
        limit: usize,
        projected: String,
    },

    #[error("set of size {got} does not match a domain of size {expected}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("not an up-set: {member} is a member but {missing} above it is not")]
    NotUpSet { member: String, missing: String },

    #[error("not isotone: f({lower}) = 1 but f({upper}) = 0 although {lower} <= {upper}")]
    NotIsotone { lower: String, upper: String },

    #[error("invalid closure system: {0}")]
    InvalidClosureSystem(String),

    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    #[error("unknown lattice element `{0}`")]
    UnknownElement(String),

    #[error("unknown domain element `{0}`")]
    UnknownDomainElement(String),

    #[error("domain is not a Boolean cube")]
    NotCube,

    #[error(
        "not a 0-join homomorphism: value at {point} differs from the join of its atom images"
    )]
    NotZeroJoinHom { point: String },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
