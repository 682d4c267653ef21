use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Pattern text or pattern word rejected.
    InvalidPattern(String),
    /// Permutation word is not a rearrangement of 1..n.
    InvalidPermutation(String),
    /// Family or sequence parameters violate a constraint.
    InvalidParams(String),
    /// Prefix for a refined count is malformed.
    InvalidPrefix(String),
    /// Brute-force request above the configured ceiling.
    CeilingExceeded { n: usize, ceiling: usize },
    /// Binomial coefficient evaluated with a negative upper argument.
    NegativeBinomial { top: i64, bottom: i64 },
    /// An exact computation produced a count that is negative or not an integer.
    NotACount { index: usize, value: String },
    /// Power-series precondition violated.
    Series(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPattern(msg) => write!(f, "invalid pattern: {msg}"),
            Error::InvalidPermutation(msg) => write!(f, "invalid permutation: {msg}"),
            Error::InvalidParams(msg) => write!(f, "invalid parameters: {msg}"),
            Error::InvalidPrefix(msg) => write!(f, "invalid prefix: {msg}"),
            Error::CeilingExceeded { n, ceiling } => {
                write!(f, "n = {n} exceeds the brute-force ceiling {ceiling}")
            }
            Error::NegativeBinomial { top, bottom } => {
                write!(f, "binomial({top}, {bottom}) has a negative upper argument")
            }
            Error::NotACount { index, value } => {
                write!(
                    f,
                    "coefficient {index} is not a nonnegative integer count: {value}"
                )
            }
            Error::Series(msg) => write!(f, "series: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
