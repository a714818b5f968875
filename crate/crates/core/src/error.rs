use std::path::PathBuf;

use num::BigUint;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("group table is empty")]
    EmptyGroup,
    #[error("group table row {row} has {len} entries, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("group table entry mul[{row}][{col}] = {value} is out of range 0..{order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: i64,
        order: usize,
    },
    #[error("element 0 is not a two-sided identity (mul[0][{element}] or mul[{element}][0] != {element})")]
    IdentityNotAtZero { element: usize },
    #[error("element {element} has no two-sided inverse")]
    MissingInverse { element: usize },
    #[error("row or column {index} of the group table is not a permutation")]
    NotLatin { index: usize },
    #[error("table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NonAssociative { a: usize, b: usize, c: usize },
    #[error("declared order {declared} does not match table size {actual}")]
    OrderMismatch { declared: usize, actual: usize },

    #[error("unknown built-in group `{0}` (expected trivial, z<k>, s<k> or d<k>)")]
    UnknownGroup(String),
    #[error("wreath product needs {required} elements, exceeding the cap of {cap}")]
    WreathTooLarge { required: BigUint, cap: usize },

    #[error("rotation weight {0} is outside [0, 1)")]
    WeightOutOfRange(String),
    #[error("component `{label}`: shift {value} is not a non-negative integer")]
    NonIntegerShift { label: String, value: String },
    #[error("invalid orbifold data: {0}")]
    InvalidOrbifold(String),
    #[error("invalid surface data: {0}")]
    InvalidSurface(String),
    #[error("invalid genus table: {0}")]
    InvalidGenus(String),
    #[error("invalid hodge table: {0}")]
    InvalidHodge(String),

    #[error("euler factor has zero q- and p-degree; the product diverges")]
    DivergentFactor,
    #[error("euler factor of degree {got} supplied for grading degree {expected}")]
    MisplacedFactor { expected: u32, got: u32 },
    #[error("cannot specialize {var} = -1 with half-integer exponent {exponent2}/2")]
    AmbiguousSign { var: char, exponent2: i64 },

    #[error("genus table stops at q^{depth} but the product needs row c({row}, ·) (factor p^{n} q^{m})")]
    MissingGenusRow { row: u64, depth: u32, n: u32, m: u32 },

    #[error("complex dimension {0} is odd; an even dimension is required")]
    OddDimension(u32),
    #[error("dimension {0} is not 2; the Hilbert scheme formula is surface-only")]
    NotSurface(u32),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(u32, u32),

    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: line {line}, column {column}: {message}")]
    Json {
        path: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn json(path: impl Into<PathBuf>, err: serde_json::Error) -> Self {
        Error::Json {
            path: path.into(),
            line: err.line(),
            column: err.column(),
            message: err.to_string(),
        }
    }
}
