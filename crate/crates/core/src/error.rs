use thiserror::Error;

use crate::subset::Subset;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("poset must have at least one element")]
    EmptyPoset,
    #[error("poset has {0} elements, the limit is {limit}", limit = crate::subset::MAX_ELEMENTS)]
    TooManyElements(usize),
    #[error("element index {index} out of range for a poset of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("relation is not reflexive at {0}")]
    NotReflexive(usize),
    #[error("relation is not transitive: {0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(usize, usize, usize),
    #[error("antisymmetry violated by the cycle {}", format_cycle(.0))]
    Cycle(Vec<String>),
    #[error("labels must be distinct and number {expected}, got {got}")]
    BadLabels { expected: usize, got: usize },
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("operation requires a nonempty subset")]
    EmptySubset,
    #[error("{what} has {size} elements, the exhaustive limit is {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("invalid order extension: {0}")]
    InvalidExtension(String),
    #[error("subset {0:?} is not an upper set")]
    NotUpperSet(Subset),
    #[error("subset {0:?} is not an ideal")]
    NotIdeal(Subset),
    #[error("subset {0:?} is not an F-set of the selection")]
    NotFSet(Subset),
    #[error("selection has no nonempty member")]
    EmptySelection,
    #[error("an explicit selection needs a built-in kind for its second level")]
    ExplicitRecursion,
    #[error("map has {got} values, its source has {expected} elements")]
    ValueCount { expected: usize, got: usize },
    #[error("map is not order-preserving: {0} <= {1} but v({0}) > v({1})")]
    NotMonotone(usize, usize),
    #[error("map is not maxitive: family {0:?} breaks the join law")]
    NotMaxitive(Subset),
    #[error("map source and extension base are different posets")]
    PosetMismatch,
    #[error("{0} is not a join-semilattice")]
    NotJoinSemilattice(&'static str),
    #[error("{0} is not a lattice")]
    NotLattice(&'static str),
    #[error("{0} is not a complete lattice")]
    NotCompleteLattice(&'static str),
    #[error("{0} is not distributive")]
    NotDistributive(&'static str),
    #[error("{0} is not a domain under the selection")]
    NotDomain(&'static str),
    #[error("missing infimum: {0}")]
    MissingInfimum(String),
    #[error("missing supremum: {0}")]
    MissingSupremum(String),
    #[error("map is not residuated on the extension")]
    NotResiduated,
    #[error("ideal family is not nondecreasing: I_{0} is not contained in I_{1}")]
    NotNondecreasing(usize, usize),
    #[error("value `{0}` is not a nonnegative rational")]
    BadRational(String),
    #[error("map is not a member of the space of maxitive maps")]
    NotInSpace,
    #[error("space of maxitive maps has {0} members, too many to order as a poset")]
    SpaceTooLarge(usize),
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("witness does not match claim `{0}`")]
    WitnessMismatch(String),
    #[error(transparent)]
    Io(#[from] IoError),
}

/// File-level failures, kept as strings so [`Error`] stays `Clone + Eq`.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IoError {
    #[error("{path}: {message}")]
    Read { path: String, message: String },
    #[error("{path}: parse error at line {line}, column {column}: {message}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: field `{field}`: {message}")]
    Field {
        path: String,
        field: String,
        message: String,
    },
}

fn format_cycle(cycle: &[String]) -> String {
    cycle.join(" <= ")
}
