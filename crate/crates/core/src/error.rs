use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by the library. Every variant is a refusal to answer;
/// no operation returns a partial or guessed value.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter sums differ: sum(a) = {sum_a}, sum(b) = {sum_b}")]
    SumMismatch { sum_a: BigInt, sum_b: BigInt },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("elementary symmetric index {k} out of range for {len} variables")]
    SymmetricIndex { k: usize, len: usize },

    #[error("cannot factor zero")]
    FactorZero,

    #[error("factorization incomplete: {n} has {digits} digits, bound is {bound}")]
    FactorizationIncomplete {
        n: BigInt,
        digits: usize,
        bound: usize,
    },

    #[error("circle action is trivial (all a_i = b_j)")]
    DegenerateAction,

    #[error("Eschenburg parameters are not positively curved for this labeling")]
    NotPositivelyCurved,

    #[error("Eschenburg parameters do not satisfy b3 <= b2 < a3 <= a2 <= a1 < b1")]
    NotNormalForm,

    #[error("Eschenburg parameters are not free")]
    NotFree,

    #[error("difference a_{k} - b_{l} is zero; its prime divisors are not a finite set")]
    ZeroDifference { k: usize, l: usize },

    #[error("q_{index} = {value} is even")]
    EvenEntry { index: usize, value: BigInt },

    #[error("candidate at shift c = {c} is singular")]
    SingularCandidate { c: BigInt },

    #[error("|H^6| does not separate shifts: sigma_2(a) = sigma_2(b)")]
    NoSeparation,

    #[error("{context}: expected {expected}, got {actual}")]
    Mismatch {
        context: String,
        expected: String,
        actual: String,
    },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Short machine-readable reason tag.
    pub fn reason(&self) -> &'static str {
        match self {
            Error::SumMismatch { .. } => "sum_mismatch",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::SymmetricIndex { .. } => "symmetric_index",
            Error::FactorZero => "factor_zero",
            Error::FactorizationIncomplete { .. } => "factorization_incomplete",
            Error::DegenerateAction => "degenerate_action",
            Error::NotPositivelyCurved => "not_positively_curved",
            Error::NotNormalForm => "not_normal_form",
            Error::NotFree => "not_free",
            Error::ZeroDifference { .. } => "zero_difference",
            Error::EvenEntry { .. } => "even_entry",
            Error::SingularCandidate { .. } => "singular_candidate",
            Error::NoSeparation => "no_separation",
            Error::Mismatch { .. } => "mismatch",
            Error::Internal(_) => "internal",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
