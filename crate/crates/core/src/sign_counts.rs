//! Signed class counts: the split of `theta` into `theta_plus` and
//! `theta_minus` by path sign, via the auxiliary quantities `G`, `P`, `H`.
//!
//! `theta_plus` is computed by two independent routes (the all-divisor `H`
//! sum and the odd-divisor `G` sum) which are asserted to agree on every
//! call; `theta_minus` is defined as `theta - theta_plus`, with the
//! equal-split and all-even recurrences demoted to cross-checks.

use crate::multidegree::MultiDegree;
use crate::numth::moebius;
use crate::path_counts::{theta, witt_f, witt_f_prime, witt_fc, WittFunctionKind};
use crate::{expect_nonneg_integer, rat_int};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// `G = F / 2`.
pub fn witt_g(m: &MultiDegree) -> BigRational {
    witt_f(m) / rat_int(2)
}

/// `P`: when all entries are even, the sum of `(mu(g)/g) G(m/g)` over the
/// even common divisors `g`; otherwise exactly zero.
///
/// The sum is taken literally over all even common divisors; the Möbius
/// function kills those divisible by 4.
pub fn p_value(m: &MultiDegree) -> BigRational {
    if !m.all_even() {
        return BigRational::zero();
    }
    let mut acc = BigRational::zero();
    for g in m.common_divisors() {
        if g % 2 != 0 {
            continue;
        }
        let mu = moebius(g);
        if mu == 0 {
            continue;
        }
        acc += BigRational::new(BigInt::from(mu), BigInt::from(g)) * witt_g(&m.divided_by(g));
    }
    acc
}

/// `H`: equals `G` when the entries are not all even; otherwise
/// `G(m) - sum_{k | m} (1/k) P(m/k)`.
pub fn h_value(m: &MultiDegree) -> BigRational {
    let g = witt_g(m);
    if !m.all_even() {
        return g;
    }
    let mut correction = BigRational::zero();
    for k in m.common_divisors() {
        correction +=
            BigRational::new(BigInt::from(1), BigInt::from(k)) * p_value(&m.divided_by(k));
    }
    g - correction
}

/// `theta_plus`: the number of positive-sign nonperiodic path classes.
///
/// Computed as the all-divisor Möbius sum of `H` and cross-checked against
/// the odd-divisor Möbius sum of `G`; the two formulas are asserted to
/// agree. For a single edge the split of the two unit loops is `(2, 0)`,
/// forced by the product identities.
pub fn theta_plus(m: &MultiDegree) -> BigInt {
    if m.num_edges() == 1 {
        return if m.entries()[0] == 1 {
            BigInt::from(2)
        } else {
            BigInt::zero()
        };
    }
    let via_h = crate::numth::div_transform(h_value, m);
    let mut via_odd_g = BigRational::zero();
    for g in m.common_divisors() {
        if g % 2 == 0 {
            continue;
        }
        let mu = moebius(g);
        if mu == 0 {
            continue;
        }
        via_odd_g += BigRational::new(BigInt::from(mu), BigInt::from(g)) * witt_g(&m.divided_by(g));
    }
    assert_eq!(
        via_h, via_odd_g,
        "theta_plus({m}): all-divisor H sum {via_h} != odd-divisor G sum {via_odd_g}"
    );
    expect_nonneg_integer(&via_h, "theta_plus")
}

/// Conditions under which the sign classes split evenly: total length
/// below `2r`, coprime entries, mixed parity, or all entries odd.
pub fn equal_split_condition(m: &MultiDegree) -> bool {
    m.total() < 2 * m.num_edges() as u64 || m.gcd() == 1 || m.mixed_parity() || m.all_odd()
}

/// `theta_minus = theta - theta_plus`, with two cross-checks asserted:
/// equality with `theta_plus` whenever `equal_split_condition` holds, and
/// the recurrence `theta_minus(m) = theta_plus(m) - theta_plus(m/2)` on
/// all-even multidegrees.
pub fn theta_minus(m: &MultiDegree) -> BigInt {
    if m.num_edges() == 1 {
        return BigInt::zero();
    }
    let plus = theta_plus(m);
    let minus = theta(m) - &plus;
    if equal_split_condition(m) {
        assert_eq!(
            minus, plus,
            "theta_minus({m}): equal-split condition holds but {minus} != {plus}"
        );
    }
    if m.all_even() {
        let recurrence = &plus - theta_plus(&m.halved());
        assert_eq!(
            minus, recurrence,
            "theta_minus({m}): halving recurrence gives {recurrence}, direct route gives {minus}"
        );
    }
    expect_nonneg_integer(&BigRational::from_integer(minus), "theta_minus")
}

/// Evaluates the selected Witt partition function at `m`.
pub fn witt_partition(kind: WittFunctionKind, m: &MultiDegree) -> BigRational {
    match kind {
        WittFunctionKind::F => witt_f(m),
        WittFunctionKind::FPrime => BigRational::from_integer(witt_f_prime(m)),
        WittFunctionKind::G => witt_g(m),
        WittFunctionKind::H => h_value(m),
        WittFunctionKind::Fc => witt_fc(m),
    }
}
