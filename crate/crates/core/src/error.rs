use alloc::string::String;
use core::fmt;

/// Failure modes shared by every construction in the crate.
///
/// `Inapplicable` means the requested parameters fall outside the range a
/// construction can serve; it is distinct from `VerifyFailed`, which signals
/// that an assembled path did not certify against its claimed multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input realization must be standard (start at 0).
    NotStandard,
    /// Input realization must be perfect (start at 0, end at v-1).
    NotPerfect,
    /// The two lengths must be coprime.
    NotCoprime { x: usize, y: usize },
    /// A length is out of the allowed range.
    LengthOutOfRange { length: usize, v: usize },
    /// Parameters outside the construction's range.
    Inapplicable(&'static str),
    /// A bridge junction did not have the requested length.
    JunctionMismatch { index: usize, wanted: usize },
    /// A rewrite pattern was not found in the path.
    PatternNotFound,
    /// Search gave up after exhausting its node budget.
    BudgetExhausted { budget: u64 },
    /// The instance is too large for the exhaustive oracle.
    OracleCapExceeded { v: usize, cap: usize },
    /// Multiset sizes do not line up with the vertex count.
    SizeMismatch { expected: usize, got: usize },
    /// The path does not satisfy a growth precondition.
    NotGrowable { m: usize },
    /// An assembled path failed verification against its claimed multiset.
    VerifyFailed(String),
    /// Could not parse a multiset or path literal.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotStandard => write!(f, "realization is not standard"),
            Error::NotPerfect => write!(f, "realization is not perfect"),
            Error::NotCoprime { x, y } => write!(f, "{x} and {y} are not coprime"),
            Error::LengthOutOfRange { length, v } => {
                write!(f, "length {length} out of range for v={v}")
            }
            Error::Inapplicable(what) => write!(f, "construction inapplicable: {what}"),
            Error::JunctionMismatch { index, wanted } => {
                write!(f, "bridge junction {index} has no end at length {wanted}")
            }
            Error::PatternNotFound => write!(f, "rewrite pattern not found"),
            Error::BudgetExhausted { budget } => write!(f, "search budget {budget} exhausted"),
            Error::OracleCapExceeded { v, cap } => {
                write!(f, "instance v={v} exceeds oracle cap {cap}")
            }
            Error::SizeMismatch { expected, got } => {
                write!(f, "size mismatch: expected {expected}, got {got}")
            }
            Error::NotGrowable { m } => write!(f, "not growable at m={m}"),
            Error::VerifyFailed(s) => write!(f, "verification failed: {s}"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
