//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("model has no components")]
    EmptyModel,
    #[error("model has {count} components, more than the supported {max}")]
    TooManyComponents { count: usize, max: usize },
    #[error("{what} has length {found}, expected {expected}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("intersection matrix row {row} has {cols} entries, expected {rows}")]
    NotSquare { rows: usize, row: usize, cols: usize },
    #[error("{what}[{index}] = {value} is outside the supported range")]
    ValueOutOfRange {
        what: &'static str,
        index: usize,
        value: i64,
    },
    #[error("intersection matrix is not symmetric at ({i}, {j})")]
    AsymmetricMatrix { i: usize, j: usize },
    #[error("negative intersection number {value} between components {i} and {j}")]
    NegativeIntersection { i: usize, j: usize, value: i64 },
    #[error("integer overflow while {context}")]
    Overflow { context: &'static str },
    #[error("component index {index} out of range for {count} components")]
    ComponentOutOfRange { index: usize, count: usize },
    #[error("components {i} and {j} do not intersect")]
    NoIntersection { i: usize, j: usize },
    #[error("{subset:?} is not a stratum of the model")]
    NotAStratum { subset: Vec<usize> },
    #[error("degree {degree} is not realizable over stratum {stratum:?}")]
    DegreeNotRealizable { degree: i64, stratum: Vec<usize> },
    #[error("stratum list is empty")]
    EmptyStrata,
    #[error("stratum list is missing singleton {{{index}}}")]
    MissingSingleton { index: usize },
    #[error("duplicate stratum {subset:?}")]
    DuplicateStratum { subset: Vec<usize> },
    #[error("semigroup generator list is empty")]
    EmptyGenerators,
    #[error("semigroup generator {value} is not positive")]
    NonPositiveGenerator { value: i64 },
    #[error("part list is empty")]
    EmptyUnion,
    #[error("degree must be positive, got {0}")]
    NonPositiveDegree(i64),
    #[error("bound check needs an integral genus >= 2, got {genus}")]
    BoundNotApplicable { genus: String },
    #[error("model fails Winters validity: {0}")]
    NotWintersValid(String),
    #[error("sample m = {m} is not above the certificate threshold m0 = {m0}")]
    SampleBelowThreshold { m: i64, m0: i64 },
    #[error("certificate construction failed: {0}")]
    CertificateConstruction(String),
    #[error("step budget exhausted after {spent} steps (budget {budget})")]
    BudgetExhausted { spent: u64, budget: u64 },
    #[error("problem size exceeds the exact-computation limit: {0}")]
    ResourceLimit(String),
    #[error("invalid search constraints: {0}")]
    InvalidConstraints(String),
    #[error("no reference family for genus {0}")]
    GenusOutsideFamilies(i64),
    #[error("unknown example name: {0}")]
    UnknownExample(String),
}

pub type Result<T> = std::result::Result<T, Error>;
