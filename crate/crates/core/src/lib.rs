//! Exact-arithmetic counters for closed non-backtracking paths on bouquet
//! graphs (graphs made of loop edges hooked to a single vertex), together
//! with the classical and generalized Witt formulas, free graded Lie algebra
//! dimensions, brute-force enumeration oracles, and coefficientwise
//! verifiers for the associated infinite-product identities over truncated
//! multivariate formal power series.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere in the crate.

pub mod identities;
pub mod lie_dims;
pub mod multidegree;
pub mod numth;
pub mod oracle;
pub mod path_counts;
pub mod series;
pub mod sign_counts;

pub use multidegree::MultiDegree;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use path_counts::WittFunctionKind;
pub use series::TruncatedSeries;

use num_traits::Signed;

/// Shorthand for an integer-valued `BigRational`.
pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d` as an exact rational.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Extracts the integer value of a rational known to be integral.
///
/// Panics when the value has a nontrivial denominator; the counters in this
/// crate assert integrality rather than assuming it.
pub fn expect_integer(value: &BigRational, context: &str) -> BigInt {
    assert!(
        value.is_integer(),
        "{context}: expected an integer, got {value}"
    );
    value.to_integer()
}

/// As `expect_integer`, additionally checking nonnegativity.
pub fn expect_nonneg_integer(value: &BigRational, context: &str) -> BigInt {
    let n = expect_integer(value, context);
    assert!(!n.is_negative(), "{context}: expected >= 0, got {n}");
    n
}
