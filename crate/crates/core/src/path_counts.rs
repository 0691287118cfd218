//! Closed-form unsigned counters: the Witt partition function `F` (plus the
//! integral variant `F'` and the counterclockwise variant `F_c`), the
//! path-class count `theta`, the classical Witt formula `M`, and the
//! cyclic-sequence machinery behind them.
//!
//! All counters are symmetric under permutation of the multidegree entries
//! and are memoized on the sorted entries, since identity verification
//! evaluates the same counters thousands of times.

use crate::multidegree::MultiDegree;
use crate::numth::{binomial_conv, div_transform, factorial};
use crate::{expect_integer, expect_nonneg_integer};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

/// A cyclic sequence of edge indices `(j_1, ..., j_a)` with `j_k != j_{k+1}`
/// and `j_a != j_1`: the skeleton of a word, before exponents are chosen.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CyclicSequence {
    symbols: Vec<u16>,
}

impl CyclicSequence {
    /// Validates the cyclic adjacent-distinct constraint; symbols are
    /// 1-based edge indices. `None` for sequences shorter than 2 or with a
    /// repeated adjacency.
    pub fn new(symbols: Vec<u16>) -> Option<Self> {
        if symbols.len() < 2 {
            return None;
        }
        let n = symbols.len();
        for k in 0..n {
            if symbols[k] == symbols[(k + 1) % n] || symbols[k] == 0 {
                return None;
            }
        }
        Some(CyclicSequence { symbols })
    }

    pub fn symbols(&self) -> &[u16] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// How many times each of the edges `1..=r` occurs.
    pub fn multiplicities(&self, r: usize) -> Vec<u64> {
        let mut t = vec![0u64; r];
        for &s in &self.symbols {
            t[(s - 1) as usize] += 1;
        }
        t
    }
}

/// Selects the Witt partition function used by the dimension formulas and
/// the product identity verifiers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WittFunctionKind {
    /// `F`: all traversal directions.
    F,
    /// `F' = N * F`: the word count, always a positive integer.
    FPrime,
    /// `G = F / 2`.
    G,
    /// `H`: the signed variant built from `G` and `P`.
    H,
    /// `F_c`: counterclockwise traversals only.
    Fc,
}

impl WittFunctionKind {
    pub fn label(&self) -> &'static str {
        match self {
            WittFunctionKind::F => "F",
            WittFunctionKind::FPrime => "F'",
            WittFunctionKind::G => "G",
            WittFunctionKind::H => "H",
            WittFunctionKind::Fc => "Fc",
        }
    }
}

/// Every cyclic adjacent-distinct sequence of length `a` over the alphabet
/// `{1..r}`, each exactly once, in lexicographic order. Sequences need not
/// use every symbol; unsupported terms are killed downstream by the
/// binomial vanishing convention. Empty for `a < 2`.
pub fn cyclic_sequences(r: usize, a: usize) -> Vec<CyclicSequence> {
    let mut out = Vec::new();
    if a < 2 || r < 1 {
        return out;
    }
    let mut seq: Vec<u16> = Vec::with_capacity(a);
    fn go(r: usize, a: usize, seq: &mut Vec<u16>, out: &mut Vec<CyclicSequence>) {
        if seq.len() == a {
            if seq[0] != seq[a - 1] {
                out.push(CyclicSequence {
                    symbols: seq.clone(),
                });
            }
            return;
        }
        for s in 1..=r as u16 {
            if seq.last() == Some(&s) {
                continue;
            }
            seq.push(s);
            go(r, a, seq, out);
            seq.pop();
        }
    }
    go(r, a, &mut seq, &mut out);
    out
}

type Census = Arc<HashMap<Vec<u64>, u64>>;

static SEQUENCE_CENSUS: LazyLock<Mutex<HashMap<(usize, usize), Census>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Counts the sequences of `cyclic_sequences(r, a)` grouped by multiplicity
/// vector. Cached per `(r, a)`; the enumeration backtracks directly without
/// materializing the sequences.
fn sequence_census(r: usize, a: usize) -> Census {
    if let Some(c) = SEQUENCE_CENSUS.lock().unwrap().get(&(r, a)) {
        return Arc::clone(c);
    }
    let mut map: HashMap<Vec<u64>, u64> = HashMap::new();
    if a >= 2 && r >= 1 {
        let mut counts = vec![0u64; r];
        // multiplicity vectors distinguish symbols, so every starting
        // symbol is enumerated
        fn go(
            r: usize,
            a: usize,
            depth: usize,
            first: usize,
            last: usize,
            counts: &mut Vec<u64>,
            map: &mut HashMap<Vec<u64>, u64>,
        ) {
            if depth == a {
                if last != first {
                    *map.entry(counts.clone()).or_insert(0) += 1;
                }
                return;
            }
            for s in 0..r {
                if depth > 0 && s == last {
                    continue;
                }
                counts[s] += 1;
                go(
                    r,
                    a,
                    depth + 1,
                    if depth == 0 { s } else { first },
                    s,
                    counts,
                    map,
                );
                counts[s] -= 1;
            }
        }
        go(r, a, 0, 0, 0, &mut counts, &mut map);
    }
    let arc: Census = Arc::new(map);
    SEQUENCE_CENSUS
        .lock()
        .unwrap()
        .insert((r, a), Arc::clone(&arc));
    arc
}

/// `rw(a) = sum_{j=1}^{r} (-1)^{r+j} C(r, j) (j-1)^a + (-1)^{a+r}`:
/// the number of cyclic adjacent-distinct sequences of length `a` that use
/// all `r` symbols.
pub fn rw_count(r: usize, a: usize) -> BigInt {
    assert!(r >= 2 && a >= 2, "rw_count needs r >= 2 and a >= 2");
    let mut sum = BigInt::zero();
    for j in 1..=r {
        let term = binomial_conv(r as i64, j as i64) * BigInt::from(j as u64 - 1).pow(a as u32);
        if (r + j).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if (a + r).is_multiple_of(2) {
        sum += BigInt::one();
    } else {
        sum -= BigInt::one();
    }
    assert!(!sum.is_negative(), "rw({r},{a}) came out negative: {sum}");
    sum
}

static WITT_F_CACHE: LazyLock<Mutex<HashMap<Vec<u64>, BigRational>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// The Witt partition function `F`.
///
/// For `r = 2` this is the double-binomial sum
/// `sum_{a=1}^{min(m1,m2)} (2^{2a}/a) C(m1-1, a-1) C(m2-1, a-1)`;
/// for `r >= 3` it is `sum_{a=r}^{N} (2^a/a) sum_{S_a} prod_c C(m_c - 1, t_c - 1)`
/// over all cyclic adjacent-distinct sequences of length `a`, grouped by
/// multiplicity vector. Callers pass the already-divided multidegree; the
/// divisor never appears as a parameter.
pub fn witt_f(m: &MultiDegree) -> BigRational {
    let r = m.num_edges();
    assert!(
        r >= 2,
        "witt_f needs r >= 2 (r = 1 is handled by theta directly)"
    );
    let key = m.sorted_entries();
    if let Some(v) = WITT_F_CACHE.lock().unwrap().get(&key) {
        return v.clone();
    }
    let value = witt_sequence_sum(m, true);
    WITT_F_CACHE.lock().unwrap().insert(key, value.clone());
    value
}

/// Shared kernel for `F` (with the 2-power direction factors) and `F_c`
/// (without them).
fn witt_sequence_sum(m: &MultiDegree, with_direction_factors: bool) -> BigRational {
    let r = m.num_edges();
    let entries = m.entries();
    let mut total = BigRational::zero();
    if r == 2 {
        let min = entries[0].min(entries[1]);
        for a in 1..=min {
            let c = binomial_conv(entries[0] as i64 - 1, a as i64 - 1)
                * binomial_conv(entries[1] as i64 - 1, a as i64 - 1);
            if c.is_zero() {
                continue;
            }
            let num = if with_direction_factors {
                BigInt::from(2).pow(2 * a as u32) * c
            } else {
                c
            };
            total += BigRational::new(num, BigInt::from(a));
        }
    } else {
        let n = m.total();
        for a in r as u64..=n {
            let census = sequence_census(r, a as usize);
            let mut inner = BigInt::zero();
            for (t, count) in census.iter() {
                let mut prod = BigInt::from(*count);
                for c in 0..r {
                    if prod.is_zero() {
                        break;
                    }
                    prod *= binomial_conv(entries[c] as i64 - 1, t[c] as i64 - 1);
                }
                inner += prod;
            }
            if inner.is_zero() {
                continue;
            }
            let num = if with_direction_factors {
                BigInt::from(2).pow(a as u32) * inner
            } else {
                inner
            };
            total += BigRational::new(num, BigInt::from(a));
        }
    }
    total
}

/// `F' = N * F`: the number of all length-`N` words with multidegree `m`.
/// Always a positive integer; asserted, not assumed.
pub fn witt_f_prime(m: &MultiDegree) -> BigInt {
    let value = witt_f(m) * BigRational::from_integer(BigInt::from(m.total()));
    let n = expect_integer(&value, "witt_f_prime");
    assert!(n.is_positive(), "witt_f_prime({m}) = {n} is not positive");
    n
}

/// `theta`: the number of rotation classes of nonperiodic closed
/// non-backtracking paths with multidegree `m`, inversions counted as
/// distinct classes.
///
/// For a single edge the only nonperiodic paths are the two unit loops, so
/// `theta((1)) = 2` and `theta((m)) = 0` for `m > 1`. Otherwise this is the
/// Möbius divisor sum of `F`.
pub fn theta(m: &MultiDegree) -> BigInt {
    if m.num_edges() == 1 {
        return if m.entries()[0] == 1 {
            BigInt::from(2)
        } else {
            BigInt::zero()
        };
    }
    let value = div_transform(witt_f, m);
    expect_nonneg_integer(&value, "theta")
}

/// `F_c`: the counterclockwise Witt partition function, computed by the
/// sum-over-sequences definition (the direction factors `2^{2a}` and `2^a`
/// are not needed for single-direction traversal).
pub fn witt_fc(m: &MultiDegree) -> BigRational {
    assert!(m.num_edges() >= 2, "witt_fc needs r >= 2");
    witt_sequence_sum(m, false)
}

/// Closed form for `F_c`: `(N-1)! / (m_1! ... m_r!)`.
///
/// Kept as an independent route so the sum form above can be cross-checked
/// coefficient by coefficient.
pub fn witt_fc_closed(m: &MultiDegree) -> BigRational {
    let n = m.total();
    let mut den = BigInt::one();
    for &mi in m.entries() {
        den *= factorial(mi);
    }
    BigRational::new(factorial(n - 1), den)
}

/// The classical Witt formula
/// `M(m) = sum_{g | m} (mu(g)/g) * (N/g)! / ((N/g) (m_1/g)! ... (m_r/g)!)`:
/// the number of nonperiodic necklaces with `m_i` beads of colour `i`,
/// equivalently counterclockwise-only path classes.
pub fn witt_m(m: &MultiDegree) -> BigInt {
    let value = div_transform(witt_fc_closed, m);
    expect_nonneg_integer(&value, "witt_m")
}
