//! Number-theoretic and combinatorial primitives: the Möbius function,
//! divisor enumeration, binomial coefficients with a total vanishing
//! convention, Stirling numbers of the second kind, compositions, and the
//! Möbius divisor-sum transform together with its inverse.

use crate::multidegree::MultiDegree;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Möbius function: +1 on 1, 0 when a squared prime divides `g`,
/// `(-1)^q` for a product of `q` distinct primes.
pub fn moebius(g: u64) -> i64 {
    assert!(g >= 1, "moebius is defined on positive integers");
    let mut g = g;
    let mut prime_count = 0u32;
    let mut p = 2u64;
    while p * p <= g {
        if g.is_multiple_of(p) {
            g /= p;
            if g.is_multiple_of(p) {
                return 0;
            }
            prime_count += 1;
        }
        p += 1;
    }
    if g > 1 {
        prime_count += 1;
    }
    if prime_count.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Positive divisors of `n`, ascending. Trial division; desk-scale inputs.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Binomial coefficient, total on all integers: `C(n, k)` for
/// `0 <= k <= n`, and 0 whenever `k < 0`, `n < 0` or `k > n`.
///
/// Being total lets the vanishing conventions of the counting formulas act
/// without call-site guards.
pub fn binomial_conv(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Generalized binomial `C(e, k)` for an arbitrary (possibly negative or
/// huge) integer `e` and small `k >= 0`: the falling factorial
/// `e (e-1) ... (e-k+1) / k!`, always an exact integer.
pub fn binomial_general(e: &BigInt, k: u64) -> BigInt {
    let mut num = BigInt::one();
    for i in 0..k {
        num *= e - BigInt::from(i);
    }
    let mut den = BigInt::one();
    for i in 1..=k {
        den *= BigInt::from(i);
    }
    num / den
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Stirling number of the second kind via the alternating sum
/// `S(n, r) = (1/r!) * sum_{j=0}^{r} (-1)^{r+j} C(r, j) j^n`;
/// zero when `r > n`.
pub fn stirling2(n: u64, r: u64) -> BigInt {
    assert!(n >= 1 && r >= 1, "stirling2 needs n >= 1 and r >= 1");
    if r > n {
        return BigInt::zero();
    }
    let mut sum = BigInt::zero();
    for j in 0..=r {
        let term = binomial_conv(r as i64, j as i64) * BigInt::from(j).pow(n as u32);
        if (r + j).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum / factorial(r)
}

/// Iterator over all ordered vectors of `parts` strictly positive integers
/// summing to `total`, in lexicographic order. Empty when `total < parts`.
pub struct Compositions {
    total: u64,
    current: Option<Vec<u64>>,
}

impl Compositions {
    fn first(total: u64, parts: u64) -> Option<Vec<u64>> {
        if parts == 0 || total < parts {
            return None;
        }
        let mut v = vec![1u64; parts as usize];
        v[parts as usize - 1] = total - (parts - 1);
        Some(v)
    }
}

impl Iterator for Compositions {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let cur = self.current.take()?;
        // Find the rightmost position (excluding the last) that can absorb
        // one unit from the surplus to its right, then reset the tail to its
        // lexicographically least completion.
        let n = cur.len();
        let mut next = None;
        for i in (0..n.saturating_sub(1)).rev() {
            let tail_sum: u64 = cur[i + 1..].iter().sum();
            let tail_min = (n - i - 1) as u64;
            if tail_sum > tail_min {
                let mut v = cur[..=i].to_vec();
                v[i] += 1;
                let remaining = self.total - v.iter().sum::<u64>();
                let tail_len = n - i - 1;
                let mut tail = vec![1u64; tail_len];
                tail[tail_len - 1] = remaining - (tail_len as u64 - 1);
                v.extend(tail);
                next = Some(v);
                break;
            }
        }
        self.current = next;
        Some(cur)
    }
}

/// Streams the compositions of `total` into exactly `parts` positive parts.
pub fn compositions(total: u64, parts: u64) -> Compositions {
    Compositions {
        total,
        current: Compositions::first(total, parts),
    }
}

/// Möbius divisor-sum transform over the common-divisor lattice:
/// `sum_{d | entries} (mu(d)/d) * f(m/d)`.
pub fn div_transform<F>(f: F, m: &MultiDegree) -> BigRational
where
    F: Fn(&MultiDegree) -> BigRational,
{
    let mut acc = BigRational::zero();
    for d in m.common_divisors() {
        let mu = moebius(d);
        if mu == 0 {
            continue;
        }
        let coeff = BigRational::new(BigInt::from(mu), BigInt::from(d));
        acc += coeff * f(&m.divided_by(d));
    }
    acc
}

/// Inverse of `div_transform`: `sum_{d | entries} (1/d) * g(m/d)`.
pub fn div_transform_inverse<G>(g: G, m: &MultiDegree) -> BigRational
where
    G: Fn(&MultiDegree) -> BigRational,
{
    let mut acc = BigRational::zero();
    for d in m.common_divisors() {
        let coeff = BigRational::new(BigInt::one(), BigInt::from(d));
        acc += coeff * g(&m.divided_by(d));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rat_int};
    use std::collections::HashMap;

    #[test]
    fn moebius_base_cases() {
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(4), 0);
        assert_eq!(moebius(6), 1);
        assert_eq!(moebius(2), -1);
        assert_eq!(moebius(30), -1);
        assert_eq!(moebius(12), 0);
    }

    #[test]
    #[should_panic]
    fn moebius_rejects_zero() {
        moebius(0);
    }

    #[test]
    fn moebius_summatory_property() {
        // sum_{d|n} mu(d) is 1 at n = 1 and 0 for every larger n
        for n in 1u64..=1000 {
            let s: i64 = divisors(n).into_iter().map(moebius).sum();
            assert_eq!(s, if n == 1 { 1 } else { 0 }, "n = {n}");
        }
    }

    #[test]
    fn binomial_vanishing_convention() {
        assert_eq!(binomial_conv(3, -1), BigInt::zero());
        assert_eq!(binomial_conv(-2, 1), BigInt::zero());
        assert_eq!(binomial_conv(2, 3), BigInt::zero());
        assert_eq!(binomial_conv(0, 0), BigInt::one());
        assert_eq!(binomial_conv(5, 2), BigInt::from(10));
        assert_eq!(binomial_conv(10, 5), BigInt::from(252));
    }

    #[test]
    fn binomial_general_matches_and_extends() {
        assert_eq!(binomial_general(&BigInt::from(5), 2), BigInt::from(10));
        // C(-1, k) = (-1)^k
        assert_eq!(binomial_general(&BigInt::from(-1), 3), BigInt::from(-1));
        assert_eq!(binomial_general(&BigInt::from(-1), 4), BigInt::from(1));
        // C(-2, 2) = 3
        assert_eq!(binomial_general(&BigInt::from(-2), 2), BigInt::from(3));
        assert_eq!(binomial_general(&BigInt::from(100), 0), BigInt::one());
    }

    /// Brute-force count of partitions of an n-set into exactly r nonempty
    /// blocks, by assigning each element a block label and normalizing.
    fn set_partitions_brute(n: u64, r: u64) -> u64 {
        let mut seen = std::collections::HashSet::new();
        let total = r.pow(n as u32);
        for code in 0..total {
            let mut labels = Vec::with_capacity(n as usize);
            let mut c = code;
            for _ in 0..n {
                labels.push(c % r);
                c /= r;
            }
            // require all r blocks used
            let mut used = vec![false; r as usize];
            for &l in &labels {
                used[l as usize] = true;
            }
            if !used.iter().all(|&u| u) {
                continue;
            }
            // canonical relabeling by first appearance
            let mut map = HashMap::new();
            let mut next = 0u64;
            let canon: Vec<u64> = labels
                .iter()
                .map(|&l| {
                    *map.entry(l).or_insert_with(|| {
                        let v = next;
                        next += 1;
                        v
                    })
                })
                .collect();
            seen.insert(canon);
        }
        seen.len() as u64
    }

    #[test]
    fn stirling_matches_partition_bruteforce() {
        // frozen from the brute-force oracle above
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        for n in 1..=8u64 {
            for r in 1..=n {
                assert_eq!(
                    stirling2(n, r),
                    BigInt::from(set_partitions_brute(n, r)),
                    "S({n},{r})"
                );
            }
        }
    }

    #[test]
    fn stirling_edges() {
        assert_eq!(stirling2(5, 5), BigInt::one());
        assert_eq!(stirling2(3, 1), BigInt::one());
        assert_eq!(stirling2(3, 4), BigInt::zero());
    }

    #[test]
    fn stirling_times_factorial_counts_surjections() {
        // r! S(n, r) = number of surjections from an n-set onto an r-set
        for n in 1..=8u64 {
            for r in 1..=n {
                let mut surjections = 0u64;
                for code in 0..r.pow(n as u32) {
                    let mut c = code;
                    let mut used = vec![false; r as usize];
                    for _ in 0..n {
                        used[(c % r) as usize] = true;
                        c /= r;
                    }
                    if used.iter().all(|&u| u) {
                        surjections += 1;
                    }
                }
                assert_eq!(
                    stirling2(n, r) * factorial(r),
                    BigInt::from(surjections),
                    "n={n} r={r}"
                );
            }
        }
    }

    #[test]
    fn compositions_examples() {
        let v: Vec<_> = compositions(3, 2).collect();
        assert_eq!(v, vec![vec![1, 2], vec![2, 1]]);
        let v: Vec<_> = compositions(2, 2).collect();
        assert_eq!(v, vec![vec![1, 1]]);
        let v: Vec<_> = compositions(1, 2).collect();
        assert!(v.is_empty());
    }

    #[test]
    fn compositions_count_is_stars_and_bars() {
        for total in 1..=9u64 {
            for parts in 1..=total {
                let count = compositions(total, parts).count() as i64;
                assert_eq!(
                    BigInt::from(count),
                    binomial_conv(total as i64 - 1, parts as i64 - 1),
                    "({total},{parts})"
                );
            }
        }
    }

    #[test]
    fn compositions_are_lexicographic_and_valid() {
        let v: Vec<_> = compositions(6, 3).collect();
        assert_eq!(v.len(), 10);
        for w in v.windows(2) {
            assert!(w[0] < w[1], "not ascending: {:?} then {:?}", w[0], w[1]);
        }
        for c in &v {
            assert_eq!(c.iter().sum::<u64>(), 6);
            assert!(c.iter().all(|&x| x >= 1));
        }
    }

    #[test]
    fn div_transform_trivial_cases() {
        let zero = |_: &MultiDegree| BigRational::zero();
        let m = MultiDegree::new(vec![4, 2]);
        assert_eq!(div_transform(zero, &m), BigRational::zero());

        // coprime entries: only d = 1 contributes
        let f = |m: &MultiDegree| rat_int(m.total() as i64 * 3 + 1);
        let m = MultiDegree::new(vec![2, 3]);
        assert_eq!(div_transform(f, &m), f(&m));
    }

    #[test]
    fn div_transform_roundtrip_on_small_lattice() {
        // fixed "random" rational values on the divisor lattice of (4,2)
        let mut table: HashMap<Vec<u64>, BigRational> = HashMap::new();
        table.insert(vec![4, 2], rat(7, 3));
        table.insert(vec![2, 1], rat(-5, 2));
        let f = |m: &MultiDegree| table[&m.entries().to_vec()].clone();
        let m = MultiDegree::new(vec![4, 2]);

        let g = |mm: &MultiDegree| div_transform(f, mm);
        assert_eq!(div_transform_inverse(g, &m), f(&m));

        let h = |mm: &MultiDegree| div_transform_inverse(f, mm);
        assert_eq!(div_transform(h, &m), f(&m));
    }

    #[test]
    fn composition_binomial_identity_small() {
        // sum over compositions (k_1..k_l) of N of prod C(k_i - 1, n_i - 1)
        // equals C(N - 1, alpha - 1)
        for l in 1..=4u64 {
            for alpha in l..=8 {
                for n in alpha..=10 {
                    for parts in compositions(alpha, l) {
                        let mut total = BigInt::zero();
                        for ks in compositions(n, l) {
                            let mut prod = BigInt::one();
                            for (k, np) in ks.iter().zip(parts.iter()) {
                                prod *= binomial_conv(*k as i64 - 1, *np as i64 - 1);
                            }
                            total += prod;
                        }
                        assert_eq!(
                            total,
                            binomial_conv(n as i64 - 1, alpha as i64 - 1),
                            "l={l} alpha={alpha} N={n} parts={parts:?}"
                        );
                    }
                }
            }
        }
    }
}
