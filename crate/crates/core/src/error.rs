use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid degree sequence: d0 = {d0} must be strictly less than d1 = {d1}")]
    InvalidDegreeSequence { d0: i64, d1: i64 },

    #[error("canonical tables store only rows 0..=2, got row {0}")]
    CanonicalRow(usize),

    #[error("cannot combine a canonical table with an explicit one")]
    MixedTailModes,

    #[error("c must be one of 0, 1, 3/2, 2 (got {0})")]
    InadmissibleHkParameter(String),

    #[error("unknown module name `{0}`")]
    UnknownName(String),

    #[error("table is not in the cone: {functional} = {value}")]
    NotInCone { functional: String, value: String },

    #[error("greedy decomposition exceeded its iteration cap of {cap} steps")]
    IterationCap { cap: usize },

    #[error("polynomial is not homogeneous: {0}")]
    Inhomogeneous(String),

    #[error("relation or generator reduces to zero in B")]
    ZeroRelation,

    #[error("relation has {got} entries but the module has {expected} generators")]
    RelationArity { expected: usize, got: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("coefficient {0} is not defined in characteristic {1}")]
    NotInField(String, u64),

    #[error("Hilbert function has not stabilized by degree {0}")]
    NotStabilized(i64),

    #[error("window [{jmin}, {jmax}] exceeds the width cap of {cap}")]
    WindowTooLarge { jmin: i64, jmax: i64, cap: usize },

    #[error("empty window: jmin = {jmin} > jmax = {jmax}")]
    EmptyWindow { jmin: i64, jmax: i64 },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
