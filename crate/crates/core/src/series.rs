//! Truncated multivariate formal power series over exact rationals.
//!
//! A series holds a sparse map from exponent vectors to nonzero rational
//! coefficients, truncated at a total degree bound; every operation prunes
//! exact zeros so equal series always compare equal structurally. The
//! formal exponential and logarithm run on total-degree layers, and
//! `product_expand` turns an exponent function into the truncation of an
//! infinite product of binomial factors.

use crate::numth::binomial_general;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Sparse truncated series: exponent vector -> coefficient, all stored
/// keys have total degree at most `degree_bound` and nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    num_vars: usize,
    degree_bound: u64,
    coeffs: BTreeMap<Vec<u64>, BigRational>,
}

impl TruncatedSeries {
    pub fn zero(num_vars: usize, degree_bound: u64) -> Self {
        assert!(num_vars >= 1, "series needs at least one variable");
        TruncatedSeries {
            num_vars,
            degree_bound,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(num_vars: usize, degree_bound: u64) -> Self {
        let mut s = TruncatedSeries::zero(num_vars, degree_bound);
        s.coeffs.insert(vec![0; num_vars], BigRational::one());
        s
    }

    pub fn constant(num_vars: usize, degree_bound: u64, value: BigRational) -> Self {
        let mut s = TruncatedSeries::zero(num_vars, degree_bound);
        s.add_term(&vec![0; num_vars], value);
        s
    }

    /// The single variable `z_i` (0-based index).
    pub fn variable(num_vars: usize, degree_bound: u64, index: usize) -> Self {
        assert!(index < num_vars);
        let mut exp = vec![0u64; num_vars];
        exp[index] = 1;
        TruncatedSeries::monomial(num_vars, degree_bound, &exp, BigRational::one())
    }

    pub fn monomial(
        num_vars: usize,
        degree_bound: u64,
        exponents: &[u64],
        coefficient: BigRational,
    ) -> Self {
        let mut s = TruncatedSeries::zero(num_vars, degree_bound);
        s.add_term(exponents, coefficient);
        s
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree_bound(&self) -> u64 {
        self.degree_bound
    }

    /// Iterates stored (exponent, coefficient) pairs in lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u64>, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// The coefficient of `z^exponents` (zero when absent).
    pub fn coeff(&self, exponents: &[u64]) -> BigRational {
        self.coeffs
            .get(exponents)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Adds `value * z^exponents`, dropping the term if it truncates away
    /// or cancels to zero.
    pub fn add_term(&mut self, exponents: &[u64], value: BigRational) {
        assert_eq!(exponents.len(), self.num_vars, "exponent arity mismatch");
        if value.is_zero() || exponents.iter().sum::<u64>() > self.degree_bound {
            return;
        }
        let entry = self
            .coeffs
            .entry(exponents.to_vec())
            .or_insert_with(BigRational::zero);
        *entry += value;
        if entry.is_zero() {
            self.coeffs.remove(exponents);
        }
    }

    fn assert_compatible(&self, other: &Self) {
        assert_eq!(
            self.num_vars, other.num_vars,
            "series have different numbers of variables"
        );
        assert_eq!(
            self.degree_bound, other.degree_bound,
            "series have different degree bounds"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term(k, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term(k, -v.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = TruncatedSeries::zero(self.num_vars, self.degree_bound);
        for (k, v) in &self.coeffs {
            out.coeffs.insert(k.clone(), -v.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = TruncatedSeries::zero(self.num_vars, self.degree_bound);
        for (ka, ca) in &self.coeffs {
            let da: u64 = ka.iter().sum();
            for (kb, cb) in &other.coeffs {
                let db: u64 = kb.iter().sum();
                if da + db > self.degree_bound {
                    continue;
                }
                let key: Vec<u64> = ka.iter().zip(kb.iter()).map(|(a, b)| a + b).collect();
                out.add_term(&key, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        let mut out = TruncatedSeries::zero(self.num_vars, self.degree_bound);
        if factor.is_zero() {
            return out;
        }
        for (k, v) in &self.coeffs {
            out.coeffs.insert(k.clone(), v * factor);
        }
        out
    }

    /// Integer power by repeated squaring.
    pub fn pow(&self, mut exponent: u64) -> Self {
        let mut base = self.clone();
        let mut acc = TruncatedSeries::one(self.num_vars, self.degree_bound);
        while exponent > 0 {
            if exponent & 1 == 1 {
                acc = acc.mul(&base);
            }
            exponent >>= 1;
            if exponent > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Re-truncates to a smaller degree bound.
    pub fn truncated(&self, degree_bound: u64) -> Self {
        let mut out = TruncatedSeries::zero(self.num_vars, degree_bound);
        for (k, v) in &self.coeffs {
            out.add_term(k, v.clone());
        }
        out
    }

    /// Substitutes `z_i -> z_i^2` for every variable.
    pub fn squared_variables(&self) -> Self {
        let mut out = TruncatedSeries::zero(self.num_vars, self.degree_bound);
        for (k, v) in &self.coeffs {
            let doubled: Vec<u64> = k.iter().map(|e| 2 * e).collect();
            out.add_term(&doubled, v.clone());
        }
        out
    }

    fn homogeneous_parts(&self) -> Vec<Vec<(Vec<u64>, BigRational)>> {
        let mut parts: Vec<Vec<(Vec<u64>, BigRational)>> =
            vec![Vec::new(); self.degree_bound as usize + 1];
        for (k, v) in &self.coeffs {
            let d: u64 = k.iter().sum();
            parts[d as usize].push((k.clone(), v.clone()));
        }
        parts
    }

    /// Formal exponential; requires a zero constant term.
    ///
    /// Runs on total-degree layers via the Euler operator recurrence
    /// `d * E_d = sum_{j=1}^{d} j * (a_j * E_{d-j})`.
    pub fn exp(&self) -> Self {
        assert!(
            self.coeff(&vec![0; self.num_vars]).is_zero(),
            "formal exp requires a zero constant term"
        );
        let d_max = self.degree_bound as usize;
        let a_parts = self.homogeneous_parts();
        let mut e_parts: Vec<Vec<(Vec<u64>, BigRational)>> = vec![Vec::new(); d_max + 1];
        e_parts[0].push((vec![0; self.num_vars], BigRational::one()));
        for d in 1..=d_max {
            let mut layer: BTreeMap<Vec<u64>, BigRational> = BTreeMap::new();
            for j in 1..=d {
                if a_parts[j].is_empty() || e_parts[d - j].is_empty() {
                    continue;
                }
                let weight = BigRational::from_integer(BigInt::from(j as u64));
                for (ka, ca) in &a_parts[j] {
                    for (ke, ce) in &e_parts[d - j] {
                        let key: Vec<u64> = ka.iter().zip(ke.iter()).map(|(a, b)| a + b).collect();
                        let entry = layer.entry(key).or_insert_with(BigRational::zero);
                        *entry += &weight * ca * ce;
                    }
                }
            }
            let inv_d = BigRational::new(BigInt::one(), BigInt::from(d as u64));
            e_parts[d] = layer
                .into_iter()
                .filter(|(_, v)| !v.is_zero())
                .map(|(k, v)| (k, v * &inv_d))
                .collect();
        }
        let mut out = TruncatedSeries::zero(self.num_vars, self.degree_bound);
        for part in e_parts {
            for (k, v) in part {
                out.add_term(&k, v);
            }
        }
        out
    }

    /// Formal logarithm; requires constant term one. Inverse of `exp`.
    pub fn log(&self) -> Self {
        assert!(
            self.coeff(&vec![0; self.num_vars]).is_one(),
            "formal log requires constant term 1"
        );
        let d_max = self.degree_bound as usize;
        let a_parts = self.homogeneous_parts();
        // t_parts holds the layers of (Euler operator applied to log)
        let mut t_parts: Vec<Vec<(Vec<u64>, BigRational)>> = vec![Vec::new(); d_max + 1];
        for d in 1..=d_max {
            let mut layer: BTreeMap<Vec<u64>, BigRational> = BTreeMap::new();
            let weight = BigRational::from_integer(BigInt::from(d as u64));
            for (ka, ca) in &a_parts[d] {
                layer.insert(ka.clone(), &weight * ca);
            }
            for j in 1..d {
                if t_parts[j].is_empty() || a_parts[d - j].is_empty() {
                    continue;
                }
                for (kt, ct) in &t_parts[j] {
                    for (ka, ca) in &a_parts[d - j] {
                        let key: Vec<u64> = kt.iter().zip(ka.iter()).map(|(a, b)| a + b).collect();
                        let entry = layer.entry(key).or_insert_with(BigRational::zero);
                        *entry -= ct * ca;
                    }
                }
            }
            t_parts[d] = layer.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        }
        let mut out = TruncatedSeries::zero(self.num_vars, self.degree_bound);
        for (d, part) in t_parts.iter().enumerate().skip(1) {
            let inv_d = BigRational::new(BigInt::one(), BigInt::from(d as u64));
            for (k, v) in part {
                out.add_term(k, v * &inv_d);
            }
        }
        out
    }

    /// First coefficient difference against `other` in graded
    /// lexicographic order, or `None` when the truncations agree.
    pub fn first_mismatch(&self, other: &Self) -> Option<(Vec<u64>, BigRational, BigRational)> {
        self.assert_compatible(other);
        let mut keys: Vec<&Vec<u64>> = self.coeffs.keys().chain(other.coeffs.keys()).collect();
        keys.sort_by_key(|k| (k.iter().sum::<u64>(), (*k).clone()));
        keys.dedup();
        for k in keys {
            let a = self.coeff(k);
            let b = other.coeff(k);
            if a != b {
                return Some((k.clone(), a, b));
            }
        }
        None
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Vec<u64>> = self.coeffs.keys().collect();
        keys.sort_by_key(|k| (k.iter().sum::<u64>(), (*k).clone()));
        for (i, k) in keys.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", self.coeffs[*k])?;
            for (var, e) in k.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*z{}", var + 1)?,
                    _ => write!(f, "*z{}^{}", var + 1, e)?,
                }
            }
        }
        Ok(())
    }
}

/// Which exponent vectors index the factors of an infinite product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorDomain {
    /// Every entry at least one: products over full-support multidegrees.
    StrictlyPositive,
    /// Entries at least zero, not all zero: products over all monomials.
    AllNonzero,
}

/// Factor shape `(1 + z^k)` versus `(1 - z^k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorSign {
    Plus,
    Minus,
}

/// All exponent vectors of the domain with total degree `<= degree_bound`,
/// in ascending total degree then lexicographic order.
pub fn factor_vectors(num_vars: usize, degree_bound: u64, domain: FactorDomain) -> Vec<Vec<u64>> {
    let min_entry = match domain {
        FactorDomain::StrictlyPositive => 1u64,
        FactorDomain::AllNonzero => 0u64,
    };
    let mut out = Vec::new();
    let mut current = vec![0u64; num_vars];
    fn go(
        pos: usize,
        remaining: u64,
        min_entry: u64,
        current: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if pos == current.len() {
            if current.iter().any(|&e| e > 0) {
                out.push(current.clone());
            }
            return;
        }
        let lo = min_entry;
        for e in lo..=remaining {
            current[pos] = e;
            go(pos + 1, remaining - e, min_entry, current, out);
        }
        current[pos] = 0;
    }
    go(0, degree_bound, min_entry, &mut current, &mut out);
    out.sort_by_key(|k| (k.iter().sum::<u64>(), k.clone()));
    out
}

/// Expands the truncation of `prod_k (1 +/- z^k)^{e(k)}` over the chosen
/// factor domain, multiplying factors in ascending total degree so the
/// intermediate series stay small. Exponents may be any integers; the
/// binomial series of each factor is exact.
pub fn product_expand<F>(
    num_vars: usize,
    degree_bound: u64,
    domain: FactorDomain,
    sign: FactorSign,
    mut exponent_fn: F,
) -> TruncatedSeries
where
    F: FnMut(&[u64]) -> BigInt,
{
    let mut acc = TruncatedSeries::one(num_vars, degree_bound);
    for k in factor_vectors(num_vars, degree_bound, domain) {
        let e = exponent_fn(&k);
        if e.is_zero() {
            continue;
        }
        acc = acc.mul(&binomial_factor(num_vars, degree_bound, &k, sign, &e));
        if acc.coeffs.is_empty() {
            break;
        }
    }
    acc
}

/// `(1 + sign * z^k)^e` truncated: `sum_j C(e, j) sign^j z^{jk}`.
fn binomial_factor(
    num_vars: usize,
    degree_bound: u64,
    k: &[u64],
    sign: FactorSign,
    e: &BigInt,
) -> TruncatedSeries {
    let weight: u64 = k.iter().sum();
    debug_assert!(weight >= 1);
    let j_max = degree_bound / weight;
    let mut factor = TruncatedSeries::zero(num_vars, degree_bound);
    for j in 0..=j_max {
        let mut c = binomial_general(e, j);
        if c.is_zero() {
            continue;
        }
        if sign == FactorSign::Minus && j % 2 == 1 {
            c = -c;
        }
        let key: Vec<u64> = k.iter().map(|&x| x * j).collect();
        factor.add_term(&key, BigRational::from_integer(c));
    }
    factor
}
