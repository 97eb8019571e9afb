use thiserror::Error;

/// Errors produced by semigroup, poset, ideal and monoid operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generators have gcd {0} > 1, not a numerical semigroup")]
    NotCoprime(u64),
    #[error("complement of the given gap set is not closed under addition ({a} + {b} = {sum} would be a gap)")]
    NotAGapSet { a: u64, b: u64, sum: u64 },
    #[error("operation requires a semigroup with at least one gap, got the full monoid of non-negative integers")]
    FullMonoid,
    #[error("the gap poset of the full monoid is empty")]
    EmptyPoset,
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("poset is not realizable as the gap poset of a numerical semigroup")]
    NotAGapPoset,
    #[error("poset is not realizable as an inclusion poset of normalized ideals")]
    NotAnInclusionPoset,
    #[error("table is not the ideal class monoid of any numerical semigroup")]
    NotAClassMonoid,
    #[error("{0} is not a minimal generator of the ideal")]
    NotMinimalGenerator(u64),
    #[error("ideals belong to different ambient semigroups")]
    AmbientMismatch,
    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),
    #[error("idempotents are not nested: the first does not absorb into the second")]
    NotNested,
    #[error("semigroup realization requested from an abstract monoid")]
    AbstractOnly,
    #[error("malformed Cayley table: {0}")]
    MalformedTable(String),
    #[error("resource limit exceeded ({0})")]
    ResourceLimit(String),
    #[error("parse error: {0}")]
    ParseError(String),
}

pub type Result<T> = std::result::Result<T, Error>;
