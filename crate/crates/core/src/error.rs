use thiserror::Error;

/// Errors raised by the partition, tabloid and polynomial operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts are not weakly decreasing at index {index}")]
    NotWeaklyDecreasing { index: usize },
    #[error("negative part {value} at index {index}")]
    NegativePart { index: usize, value: i64 },
    #[error("Frobenius coordinates must be strictly decreasing")]
    NonStrictCoordinates,
    #[error("Frobenius coordinates have different lengths ({alpha} vs {beta})")]
    LengthMismatch { alpha: usize, beta: usize },
    #[error("not a content sequence: {0}")]
    NotAContentSequence(String),
    #[error("cell {0:?} is not in the shape")]
    CellOutOfShape((i64, i64)),
    #[error("enumeration of {what} would produce {estimate} items, above the cap of {cap}")]
    EnumerationTooLarge {
        what: &'static str,
        estimate: String,
        cap: u64,
    },
    #[error("shape is not of the form required by the bijection: {0}")]
    ShapeNotOfForm(String),
    #[error("invalid tabloid: {0}")]
    InvalidTabloid(String),
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("partition of length {length} does not fit in {n} variables")]
    LengthExceedsN { length: usize, n: usize },
    #[error("evaluation points must be distinct (repeated {0})")]
    RepeatedPoint(i64),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
