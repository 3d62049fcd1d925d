use thiserror::Error;

/// Errors raised by the enumeration engine and its value types.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cell ({row},{col}) lies outside the Young diagram")]
    CellOutsideDiagram { row: usize, col: u32 },

    #[error("modulus must be positive, got 0")]
    ZeroModulus,

    #[error("partition parts must be positive, found 0 at position {index}")]
    NonPositivePart { index: usize },

    #[error("partition parts must be weakly decreasing, found {prev} followed by {next}")]
    NotWeaklyDecreasing { prev: u32, next: u32 },

    #[error("beta-set elements must be positive")]
    NonPositiveBetaElement,

    #[error("beta-set element {0} occurs more than once")]
    DuplicateBetaElement(u32),

    #[error("invalid composition: {0}")]
    InvalidComposition(&'static str),

    #[error("partition {partition} does not have {expected}")]
    WrongPartsShape {
        partition: String,
        expected: &'static str,
    },

    #[error("({s},{t}) has gcd {gcd} > 1 and is treated as an infinite family; pass a bound to explore it")]
    InfiniteFamily { s: u32, t: u32, gcd: u32 },

    #[error("({s},{t}) are not coprime (gcd {gcd})")]
    NotCoprime { s: u32, t: u32, gcd: u32 },

    #[error("inexact division: {numerator} is not divisible by {denominator}")]
    InexactDivision { numerator: String, denominator: String },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
