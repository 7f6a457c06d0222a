use num_bigint::BigUint;
use thiserror::Error;

use crate::kk::FeasibilityReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("spread t must be at least 1 (got {0})")]
    ZeroSpread(u32),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("cannot parse monomial {input:?}: {reason}")]
    ParseMonomial { input: String, reason: String },

    #[error("parse error on line {line}: {reason}")]
    ParseFile { line: usize, reason: String },

    #[error("{monomial} is not {t}-spread")]
    NotTSpread { monomial: String, t: u32 },

    #[error("{monomial} uses a variable index above n = {n}")]
    IndexOutOfRange { monomial: String, n: u32 },

    #[error("degree mismatch: expected {expected}, got {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("shadow spread {tau} exceeds the set spread {t}")]
    TauExceedsSpread { tau: u32, t: u32 },

    #[error("a = {a} exceeds |M_{{{n},{d},{t}}}| = {bound}")]
    ExceedsCount {
        a: BigUint,
        n: u32,
        d: u32,
        t: u32,
        bound: BigUint,
    },

    #[error("rank {a} is out of range: |M_{{{n},{d},{t}}}| = {count}")]
    RankOutOfRange {
        a: BigUint,
        n: u32,
        d: u32,
        t: u32,
        count: BigUint,
    },

    #[error("set is not {t}-spread strongly stable")]
    NotStronglyStable { t: u32 },

    #[error("oracle size guard exceeded: {0}")]
    SizeGuard(String),

    #[error("sequence is not an f_t-vector of a t-spread strongly stable ideal: {}", .0.summary())]
    Infeasible(Box<FeasibilityReport>),
}
