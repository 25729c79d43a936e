use thiserror::Error;

/// Errors raised by constructions and checks over finite structures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A table entry points outside the carrier.
    #[error("{table} table entry at ({row}, {col}) is {value}, but the carrier has {size} elements")]
    MalformedTable { table: &'static str, row: usize, col: usize, value: usize, size: usize },
    /// A table has the wrong number of rows or columns.
    #[error("{table} table has shape {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    TableShape { table: &'static str, rows: usize, cols: usize, expected_rows: usize, expected_cols: usize },
    #[error("{what} would have {size} elements, exceeding the cap of {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },
    /// A required algebraic law does not hold; the witness is the least offending tuple.
    #[error("{law} does not hold, witness {witness:?}")]
    LawViolation { law: String, witness: Vec<usize> },
    #[error("structure has no zero element")]
    MissingZero,
    #[error("structure has no multiplicative identity")]
    MissingOne,
    #[error("structure is not commutative")]
    NotCommutative,
    #[error("element {0} is outside the carrier")]
    ElementOutOfRange(usize),
    #[error("ideal is not proper")]
    NotProper,
    #[error("the ideal is not contained in the union of the covers")]
    NotCovering,
    #[error("precondition unmet: {0}")]
    Precondition(String),
    #[error("hypotheses unmet: {0}")]
    HypothesesUnmet(String),
    /// A theorem-backed assertion failed on a concrete instance.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
