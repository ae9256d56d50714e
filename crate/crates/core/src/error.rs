use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
#[non_exhaustive]
pub enum Error {
    #[error("table is not square: row {row} has {found} entries, expected {expected}")]
    NonSquareTable {
        row: usize,
        found: usize,
        expected: usize,
    },

    #[error("entry {value} at ({row}, {col}) is out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error(
        "associativity fails at ({a}, {b}, {c}): ({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}"
    )]
    NotAssociative {
        a: usize,
        b: usize,
        c: usize,
        left: usize,
        right: usize,
    },

    #[error("empty table")]
    EmptyTable,

    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("element {element} is out of range for order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("the empty subset is rejected here")]
    EmptySubset,

    #[error("subset is not closed: {a} * {b} = {product} falls outside it")]
    NotClosed {
        a: usize,
        b: usize,
        product: usize,
    },

    #[error("order {order} exceeds the enumeration bound {bound}")]
    EnumerationBound { order: usize, bound: usize },

    #[error("chain resolution must be at least 1")]
    ZeroResolution,

    #[error("chain mismatch: resolution {left} vs {right}")]
    ChainMismatch { left: usize, right: usize },

    #[error("{values} values do not match semigroup order {order}")]
    OrderMismatch { values: usize, order: usize },

    #[error("level {level} is out of range 0..={max}")]
    LevelOutOfRange { level: usize, max: usize },

    #[error("cut level must be at least 1")]
    ZeroCutLevel,

    #[error("{assignments} assignments exceed the budget {budget}")]
    BudgetExceeded { assignments: u128, budget: u128 },

    #[error(
        "{evaluations} composite evaluations exceed the budget {budget}; \
         lower the chain resolution or raise the budget"
    )]
    CompositeBudgetExceeded { evaluations: u128, budget: u128 },

    #[error("not a fuzzy subsemigroup")]
    NotFuzzySubsemigroup,

    #[error("region is not a subsemigroup of the chain product")]
    RegionNotSubsemigroup,

    #[error("partition is not a congruence: {a} ~ {b} but translates apart at {c}")]
    NotCongruence { a: usize, b: usize, c: usize },

    #[error("index semigroup is not a semilattice")]
    NotSemilattice,

    #[error("family has {family} members but the index semigroup has order {index}")]
    FamilyMismatch { family: usize, index: usize },

    #[error("family member {member} is not a fuzzy subsemigroup")]
    FamilyMemberNotSubsemigroup { member: usize },

    #[error("family does not satisfy the semilattice-family conditions")]
    NotSemilatticeFamily,

    #[error("invalid catalog parameters: {0}")]
    InvalidCatalog(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cache header {found:?} does not match version {expected:?}")]
    CacheVersion { found: String, expected: String },

    #[error("verified statement failed: {0}")]
    TheoremViolation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
