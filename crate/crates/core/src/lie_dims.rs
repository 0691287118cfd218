//! Generator dimensions of the graded vector space underlying the free Lie
//! algebra whose homogeneous dimensions are the path-class counts: the
//! alternating multiset expansion (a multivariate Faà di Bruno formula),
//! an independent series-extraction route through `1 - exp(-g)`, and the
//! forward map from generator dimensions back to Witt partition values.

use crate::multidegree::MultiDegree;
use crate::path_counts::WittFunctionKind;
use crate::series::{factor_vectors, FactorDomain, TruncatedSeries};
use crate::sign_counts::witt_partition;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// The componentwise-positive vectors `l <= k`, in lexicographic order.
fn positive_vectors_leq(k: &MultiDegree) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = vec![0u64; k.num_edges()];
    fn go(pos: usize, bounds: &[u64], current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if pos == bounds.len() {
            out.push(current.clone());
            return;
        }
        for e in 1..=bounds[pos] {
            current[pos] = e;
            go(pos + 1, bounds, current, out);
        }
    }
    go(0, k.entries(), &mut current, &mut out);
    out
}

/// Walks every multiset `{(l_i, a_i)}` of componentwise-positive vectors
/// `l_i <= k` with multiplicities `a_i >= 1` and weighted sum exactly `k`,
/// calling `emit` with the multiset size `lambda` and the accumulated
/// product `prod_i w(l_i)^{a_i} / a_i!`.
fn fold_weighted_multisets<W, E>(k: &MultiDegree, weight_of: W, emit: &mut E)
where
    W: Fn(&MultiDegree) -> BigRational,
    E: FnMut(u64, &BigRational),
{
    let vectors = positive_vectors_leq(k);
    let weights: Vec<BigRational> = vectors
        .iter()
        .map(|v| weight_of(&MultiDegree::new(v.clone())))
        .collect();
    let mut remaining: Vec<u64> = k.entries().to_vec();

    fn go<E: FnMut(u64, &BigRational)>(
        index: usize,
        vectors: &[Vec<u64>],
        weights: &[BigRational],
        remaining: &mut Vec<u64>,
        lambda: u64,
        product: BigRational,
        emit: &mut E,
    ) {
        if remaining.iter().all(|&x| x == 0) {
            if lambda >= 1 {
                emit(lambda, &product);
            }
            return;
        }
        if index == vectors.len() {
            return;
        }
        // multiplicity zero for this vector
        go(
            index + 1,
            vectors,
            weights,
            remaining,
            lambda,
            product.clone(),
            emit,
        );
        // positive multiplicities while the vector still fits
        let v = &vectors[index];
        let mut a = 0u64;
        let mut term = product;
        loop {
            if remaining.iter().zip(v.iter()).any(|(&rem, &l)| rem < l) {
                break;
            }
            a += 1;
            for (rem, &l) in remaining.iter_mut().zip(v.iter()) {
                *rem -= l;
            }
            // multiply one more factor w / a into the running product
            term = term * &weights[index] / BigRational::from_integer(BigInt::from(a));
            if !term.is_zero() {
                go(
                    index + 1,
                    vectors,
                    weights,
                    remaining,
                    lambda + a,
                    term.clone(),
                    emit,
                );
            }
        }
        // restore
        for (rem, &l) in remaining.iter_mut().zip(v.iter()) {
            *rem += l * a;
        }
    }
    go(
        0,
        &vectors,
        &weights,
        &mut remaining,
        0,
        BigRational::one(),
        emit,
    );
}

/// Generator dimension by the alternating multiset expansion:
/// `d(k) = sum_{lambda>=1} (-1)^{lambda+1} sum_{multisets} prod_i
/// W(l_i)^{a_i} / a_i!`, where the multisets have weighted sum `k` and the
/// partition function vanishes on vectors with a zero component (only
/// componentwise-positive vectors are walked).
pub fn dims_faa(kind: WittFunctionKind, k: &MultiDegree) -> BigRational {
    assert!(k.num_edges() >= 2, "dimensions need r >= 2");
    let mut total = BigRational::zero();
    fold_weighted_multisets(k, |l| witt_partition(kind, l), &mut |lambda, product| {
        if lambda % 2 == 1 {
            total += product;
        } else {
            total -= product;
        }
    });
    total
}

/// Generator dimension by series extraction: builds the generating
/// function `g` of the partition values truncated at `|k|`, expands
/// `1 - exp(-g)`, and reads off the coefficient of `z^k`. Independent of
/// the expansion route above.
pub fn dims_series(kind: WittFunctionKind, k: &MultiDegree) -> BigRational {
    assert!(k.num_edges() >= 2, "dimensions need r >= 2");
    let num_vars = k.num_edges();
    let degree_bound = k.total();
    let mut g = TruncatedSeries::zero(num_vars, degree_bound);
    for v in factor_vectors(num_vars, degree_bound, FactorDomain::StrictlyPositive) {
        let m = MultiDegree::new(v.clone());
        g.add_term(&v, witt_partition(kind, &m));
    }
    let one = TruncatedSeries::one(num_vars, degree_bound);
    let f = one.sub(&g.neg().exp());
    f.coeff(k.entries())
}

/// Forward map from generator dimensions to the Witt partition value:
/// `W(k) = sum_{multisets s} ((|s|-1)!/s!) prod_i d(l_i)^{s_i}` over the
/// multisets of componentwise-positive vectors with weighted sum `k`.
pub fn witt_from_dims<D>(d: D, k: &MultiDegree) -> BigRational
where
    D: Fn(&MultiDegree) -> BigRational,
{
    let mut total = BigRational::zero();
    fold_weighted_multisets(k, d, &mut |lambda, product| {
        // (|s|-1)! restores the denominator layout prod 1/s_i! -> (|s|-1)!/s!
        let mut weight = BigRational::one();
        for i in 2..lambda {
            weight *= BigRational::from_integer(BigInt::from(i));
        }
        total += product * weight;
    });
    total
}
