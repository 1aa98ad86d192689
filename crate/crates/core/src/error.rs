//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The toolkit works with normalized functions only. A caller holding
    /// g with g(1) = a != 1 should divide through by a and use
    /// (a f)^{-1}(n) = f^{-1}(n) / a to recover the inverse of g.
    #[error("f(1) = {found} but f(1) = 1 is required; divide the function by f(1) first")]
    NotNormalized { found: String },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime power {p}^{k} does not fit in 64 bits")]
    PrimePowerTooLarge { p: u64, k: u64 },

    /// Counting overflowed the checked 64-bit accumulator.
    #[error("factorization count overflowed 64 bits at n = {n}")]
    CounterOverflow { n: u64 },

    /// Enumeration was aborted after visiting `ceiling` factor prefixes.
    #[error("enumeration exceeded the configured ceiling of {ceiling} tuples at n = {n}")]
    EnumerationCeiling { n: u64, ceiling: u64 },

    #[error("partition size {m} exceeds the supported ceiling {ceiling}")]
    PartitionCeiling { m: u32, ceiling: u32 },

    /// Predicate-backed factor sets are undefined past their horizon.
    #[error("factor-set membership queried at {n} beyond the horizon {horizon}")]
    HorizonExceeded { horizon: u64, n: u64 },

    #[error("factor sets must be non-empty with every member >= 2")]
    InvalidFactorSet,

    #[error("zeta series diverges at s = {s} (abscissa of convergence {abscissa})")]
    Divergent { s: f64, abscissa: f64 },

    #[error("s = {0} is too close to the pole of zeta at s = 1")]
    NearPole(f64),

    #[error("tolerance {tol:e} is not achievable in binary64 near s = {s}")]
    ToleranceUnachievable { tol: f64, s: f64 },

    #[error("no sign change found for `{equation}` on the search domain")]
    NoBracket { equation: String },

    /// Zeta over a predicate-backed set has no closed form; only the
    /// explicitly truncated evaluator is offered for it.
    #[error("zeta over a predicate set is not rigorous; call zeta_truncated instead")]
    NonRigorousZeta,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("the {kind} bound applies only to prime powers; n = {n} is not one")]
    NotPrimePower { kind: String, n: u64 },

    /// A verification sweep found its hypothesis violated; the bound is not
    /// claimed and the sweep aborts.
    #[error("hypothesis violated at n = {n}: {detail}")]
    HypothesisViolation { n: u64, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
