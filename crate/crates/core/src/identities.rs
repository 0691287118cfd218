//! Coefficientwise verifiers for the infinite-product identities tying the
//! path-class counts to formal power series: the two-variable-per-edge
//! square product, the plus/minus cancellation, the exponential product
//! forms, the generalized Witt identity, and the classical Witt product.
//!
//! A verifier never panics on a failed identity; it returns a report with
//! the first mismatching exponent vector in graded lexicographic order.
//! Each verifier accepts an optional corruption that bumps a single
//! exponent, a testing affordance for demonstrating sensitivity.

use crate::multidegree::MultiDegree;
use crate::numth::div_transform;
use crate::path_counts::WittFunctionKind;
use crate::series::{product_expand, FactorDomain, FactorSign, TruncatedSeries};
use crate::sign_counts::{h_value, theta_minus, theta_plus, witt_partition};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use std::fmt;

/// A single coefficient disagreement (or an invalid extracted dimension).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub exponents: Vec<u64>,
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub note: Option<String>,
}

/// Outcome of one identity check. `passed` is true exactly when
/// `first_mismatch` is absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: String,
    pub num_vars: usize,
    pub degree_bound: u64,
    pub passed: bool,
    pub first_mismatch: Option<Mismatch>,
}

impl VerificationReport {
    fn from_comparison(
        identity: &str,
        num_vars: usize,
        degree_bound: u64,
        lhs: &TruncatedSeries,
        rhs: &TruncatedSeries,
    ) -> Self {
        let first_mismatch = lhs
            .first_mismatch(rhs)
            .map(|(exponents, lhs, rhs)| Mismatch {
                exponents,
                lhs,
                rhs,
                note: None,
            });
        VerificationReport {
            identity: identity.to_string(),
            num_vars,
            degree_bound,
            passed: first_mismatch.is_none(),
            first_mismatch,
        }
    }

    fn failure(identity: &str, num_vars: usize, degree_bound: u64, mismatch: Mismatch) -> Self {
        VerificationReport {
            identity: identity.to_string(),
            num_vars,
            degree_bound,
            passed: false,
            first_mismatch: Some(mismatch),
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(
                f,
                "{}: PASS (vars={}, degree<={})",
                self.identity, self.num_vars, self.degree_bound
            )
        } else {
            let m = self.first_mismatch.as_ref().unwrap();
            write!(
                f,
                "{}: FAIL at z^{:?}: lhs={}, rhs={}",
                self.identity, m.exponents, m.lhs, m.rhs
            )?;
            if let Some(note) = &m.note {
                write!(f, " ({note})")?;
            }
            Ok(())
        }
    }
}

/// Bumps one product exponent by `delta` at the given raw exponent vector;
/// exists so tests (and the CLI) can demonstrate that the verifiers detect
/// seeded corruption.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corruption {
    pub at: Vec<u64>,
    pub delta: i64,
}

impl Corruption {
    fn applies_to(&self, k: &[u64]) -> bool {
        self.at == k
    }

    fn delta_at(&self, k: &[u64]) -> BigInt {
        if self.applies_to(k) {
            BigInt::from(self.delta)
        } else {
            BigInt::from(0)
        }
    }
}

fn corruption_delta(corrupt: Option<&Corruption>, k: &[u64]) -> BigInt {
    corrupt.map_or_else(|| BigInt::from(0), |c| c.delta_at(k))
}

/// Sign-class exponents for an arbitrary nonnegative vector: zero entries
/// are stripped before consulting the counters, and the all-unsupported
/// vector never occurs in a product domain.
fn stripped_theta_plus(raw: &[u64]) -> BigInt {
    let m = MultiDegree::stripping_zeros(raw).expect("factor domains exclude the zero vector");
    theta_plus(&m)
}

fn stripped_theta_minus(raw: &[u64]) -> BigInt {
    let m = MultiDegree::stripping_zeros(raw).expect("factor domains exclude the zero vector");
    theta_minus(&m)
}

/// Verifies that the product of `(1 + z^m)^{N+} (1 - z^m)^{N-}` over all
/// nonzero multidegrees equals `prod_j (1 + z_j)^2`, where the exponents
/// are the signed class counts of the zero-stripped multidegree. The
/// optional corruption bumps the minus-side exponent.
pub fn verify_sherman(
    edges: usize,
    degree_bound: u64,
    corrupt: Option<&Corruption>,
) -> VerificationReport {
    assert!(
        edges >= 2,
        "the square-product identity needs at least two loops"
    );
    let plus = product_expand(
        edges,
        degree_bound,
        FactorDomain::AllNonzero,
        FactorSign::Plus,
        stripped_theta_plus,
    );
    let minus = product_expand(
        edges,
        degree_bound,
        FactorDomain::AllNonzero,
        FactorSign::Minus,
        |k| stripped_theta_minus(k) + corruption_delta(corrupt, k),
    );
    let lhs = plus.mul(&minus);

    let mut rhs = TruncatedSeries::one(edges, degree_bound);
    for j in 0..edges {
        let factor = TruncatedSeries::one(edges, degree_bound).add(&TruncatedSeries::variable(
            edges,
            degree_bound,
            j,
        ));
        rhs = rhs.mul(&factor.pow(2));
    }
    VerificationReport::from_comparison("sherman", edges, degree_bound, &lhs, &rhs)
}

/// Verifies the cancellation `prod_m (1 + z^m)^{theta+} (1 - z^m)^{theta-}
/// = 1` over componentwise-positive multidegrees.
pub fn verify_cancellation(
    num_vars: usize,
    degree_bound: u64,
    corrupt: Option<&Corruption>,
) -> VerificationReport {
    assert!(num_vars >= 2);
    let plus = product_expand(
        num_vars,
        degree_bound,
        FactorDomain::StrictlyPositive,
        FactorSign::Plus,
        stripped_theta_plus,
    );
    let minus = product_expand(
        num_vars,
        degree_bound,
        FactorDomain::StrictlyPositive,
        FactorSign::Minus,
        |k| stripped_theta_minus(k) + corruption_delta(corrupt, k),
    );
    let lhs = plus.mul(&minus);
    let rhs = TruncatedSeries::one(num_vars, degree_bound);
    VerificationReport::from_comparison("cancellation", num_vars, degree_bound, &lhs, &rhs)
}

/// The generating function of the `H` Witt partition values, truncated.
fn h_generating_series(num_vars: usize, degree_bound: u64) -> TruncatedSeries {
    let mut g = TruncatedSeries::zero(num_vars, degree_bound);
    for k in crate::series::factor_vectors(num_vars, degree_bound, FactorDomain::StrictlyPositive) {
        let m = MultiDegree::new(k.clone());
        g.add_term(&k, h_value(&m));
    }
    g
}

/// Verifies the exponential product forms: the plus product equals
/// `exp(g(z) - g(z^2))` and the minus product equals `exp(g(z^2) - g(z))`,
/// with `g` the generating function of `H`. The corruption bumps the
/// respective exponent in whichever product it targets.
pub fn verify_plus_minus_products(
    num_vars: usize,
    degree_bound: u64,
    corrupt: Option<&Corruption>,
) -> VerificationReport {
    assert!(num_vars >= 2);
    let g = h_generating_series(num_vars, degree_bound);
    let g_squared = g.squared_variables();

    let plus_lhs = product_expand(
        num_vars,
        degree_bound,
        FactorDomain::StrictlyPositive,
        FactorSign::Plus,
        |k| stripped_theta_plus(k) + corruption_delta(corrupt, k),
    );
    let plus_rhs = g.sub(&g_squared).exp();
    if let Some((exponents, lhs, rhs)) = plus_lhs.first_mismatch(&plus_rhs) {
        return VerificationReport::failure(
            "plus-minus-products",
            num_vars,
            degree_bound,
            Mismatch {
                exponents,
                lhs,
                rhs,
                note: Some("plus product".to_string()),
            },
        );
    }

    let minus_lhs = product_expand(
        num_vars,
        degree_bound,
        FactorDomain::StrictlyPositive,
        FactorSign::Minus,
        |k| stripped_theta_minus(k) + corruption_delta(corrupt, k),
    );
    let minus_rhs = g_squared.sub(&g).exp();
    if let Some((exponents, lhs, rhs)) = minus_lhs.first_mismatch(&minus_rhs) {
        return VerificationReport::failure(
            "plus-minus-products",
            num_vars,
            degree_bound,
            Mismatch {
                exponents,
                lhs,
                rhs,
                note: Some("minus product".to_string()),
            },
        );
    }

    VerificationReport {
        identity: "plus-minus-products".to_string(),
        num_vars,
        degree_bound,
        passed: true,
        first_mismatch: None,
    }
}

/// Homogeneous-space dimension for the chosen Witt partition function:
/// the Möbius divisor sum of the partition values.
pub fn generalized_dimension(kind: WittFunctionKind, k: &MultiDegree) -> BigRational {
    div_transform(|m| witt_partition(kind, m), k)
}

/// Verifies the generalized Witt identity for the chosen kind:
/// `prod_k (1 - z^k)^{dim(k)} = 1 - f` with `f = 1 - exp(-g)` and `g` the
/// generating function of the partition values. Additionally checks every
/// extracted dimension is a nonnegative integer.
pub fn verify_gen_witt(
    kind: WittFunctionKind,
    num_vars: usize,
    degree_bound: u64,
    corrupt: Option<&Corruption>,
) -> VerificationReport {
    assert!(num_vars >= 2);
    let identity = format!("gen-witt[{}]", kind.label());
    let vectors =
        crate::series::factor_vectors(num_vars, degree_bound, FactorDomain::StrictlyPositive);

    let mut dims: Vec<(Vec<u64>, BigInt)> = Vec::with_capacity(vectors.len());
    let mut g = TruncatedSeries::zero(num_vars, degree_bound);
    for k in vectors {
        let m = MultiDegree::new(k.clone());
        let dim = generalized_dimension(kind, &m);
        if !dim.is_integer() || dim.is_negative() {
            return VerificationReport::failure(
                &identity,
                num_vars,
                degree_bound,
                Mismatch {
                    exponents: k,
                    lhs: dim,
                    rhs: BigRational::from_integer(BigInt::from(0)),
                    note: Some("extracted dimension is not a nonnegative integer".to_string()),
                },
            );
        }
        g.add_term(&k, witt_partition(kind, &m));
        dims.push((k, dim.to_integer()));
    }

    let lhs = product_expand(
        num_vars,
        degree_bound,
        FactorDomain::StrictlyPositive,
        FactorSign::Minus,
        |k| {
            let base = dims
                .iter()
                .find(|(v, _)| v.as_slice() == k)
                .map(|(_, d)| d.clone())
                .unwrap_or_else(|| BigInt::from(0));
            base + corruption_delta(corrupt, k)
        },
    );

    let one = TruncatedSeries::one(num_vars, degree_bound);
    let f = one.sub(&g.neg().exp());
    let rhs = one.sub(&f);
    VerificationReport::from_comparison(&identity, num_vars, degree_bound, &lhs, &rhs)
}

/// Verifies the classical Witt product
/// `prod_m (1 - z^m)^{M(m)} = 1 - sum_i z_i` over all nonzero multidegrees.
pub fn verify_witt_classical(
    num_vars: usize,
    degree_bound: u64,
    corrupt: Option<&Corruption>,
) -> VerificationReport {
    assert!(num_vars >= 1);
    let lhs = product_expand(
        num_vars,
        degree_bound,
        FactorDomain::AllNonzero,
        FactorSign::Minus,
        |k| {
            let m =
                MultiDegree::stripping_zeros(k).expect("factor domains exclude the zero vector");
            crate::path_counts::witt_m(&m) + corruption_delta(corrupt, k)
        },
    );
    let mut rhs = TruncatedSeries::one(num_vars, degree_bound);
    for i in 0..num_vars {
        rhs = rhs.sub(&TruncatedSeries::variable(num_vars, degree_bound, i));
    }
    VerificationReport::from_comparison("witt-classical", num_vars, degree_bound, &lhs, &rhs)
}
