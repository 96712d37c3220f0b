use thiserror::Error;

/// Errors reported by this crate.
///
/// Variants fall into two classes. Most describe invalid input or an
/// unsatisfied precondition: the caller asked for something the math does not
/// support (a repeated-root length, a bound formula outside its hypotheses, a
/// table too large to build). `Internal` is different: it means a consistency
/// check that should be unconditionally true has failed, so the library itself
/// has a bug. Callers should treat `Internal` as fatal.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("field of order {order} exceeds the table cap of {cap} elements")]
    FieldTooLarge { order: u128, cap: u64 },

    #[error("no primitive {n}-th root of unity: {n} does not divide {order} - 1")]
    NoNthRoot { n: u64, order: u64 },

    #[error("{q_sub} is not the order of a subfield of the field of order {order}")]
    NotASubfield { q_sub: u64, order: u64 },

    #[error("gcd({n}, {q}) != 1; only simple-root lengths are supported")]
    RepeatedRoot { n: u64, q: u64 },

    #[error("{a} is not invertible modulo {n}")]
    NotAUnit { a: i64, n: u64 },

    #[error("cosets {0:?} are not pairwise distinct after normalization")]
    DuplicateCosets(Vec<u64>),

    #[error("enumeration needs {needed} steps, over the cap of {cap}")]
    CapExceeded { needed: u128, cap: u128 },

    #[error("{method} does not apply: {reason}")]
    NotApplicable { method: &'static str, reason: String },

    #[error("map {0} does not preserve the code")]
    NotAnAutomorphism(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    /// A consistency check failed. This is a bug in the library, not bad input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn not_applicable(method: &'static str, reason: impl Into<String>) -> Self {
        Error::NotApplicable {
            method,
            reason: reason.into(),
        }
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// True when the error signals a library bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
