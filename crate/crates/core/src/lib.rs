//! Computational toolkit for arithmetic functions under Dirichlet
//! convolution.
//!
//! The crate computes exact Dirichlet inverses by three independent routes,
//! counts and enumerates ordered factorizations over configurable factor
//! sets, solves the zeta-type root equations behind every growth exponent,
//! and runs verification sweeps that compare exact inverses against the
//! explicit upper bounds.
//!
//! All convolution arithmetic is exact over arbitrary-precision rationals;
//! functions are therefore restricted to rational values so that every
//! identity can be asserted with zero tolerance. Counting uses checked
//! 64-bit integers, and real-valued bound evaluations are rounded outward
//! before any comparison with an exact quantity.

pub mod arith;
pub mod bounds;
pub mod error;
pub mod factorizations;
pub mod primes;
pub mod zeta;

pub use arith::{ArithmeticFunction, InverseTable, Rat};
pub use error::{Error, Result};

/// Re-export of the numeric stack so downstream crates can name the
/// rational/bigint types without version skew.
pub use num;
