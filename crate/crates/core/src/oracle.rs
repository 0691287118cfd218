//! Brute-force ground truth: exhaustive enumeration of bouquet-graph words
//! and of necklace colourings, providing verification of `theta` and
//! `witt_m` that is independent of the closed-form counters.
//!
//! A word is stored as its full length-`N` step string (one entry per edge
//! traversal, with direction); rotations of the step string are distinct
//! words unless they coincide, which makes the total word count match
//! `witt_f_prime` structurally. The necklace oracles enumerate coloured
//! bead strings directly and share no code with the word generator.

use crate::multidegree::MultiDegree;
use crate::numth::compositions;
use crate::path_counts::cyclic_sequences;
use std::collections::{HashMap, HashSet};
use std::fmt;

/// Default cap on the total length `N` accepted by the oracles.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 12;

/// Resource refusal from the enumeration oracles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    BoundExceeded { total: u64, limit: u64 },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::BoundExceeded { total, limit } => write!(
                f,
                "total path length {total} exceeds the enumeration bound {limit}; \
                 raise the bound explicitly to proceed"
            ),
        }
    }
}

impl std::error::Error for OracleError {}

/// One traversal step: an edge index (1-based) and whether the edge is
/// followed along its orientation.
pub type Step = (u16, bool);

/// A closed path of length `N`, as the string of its `N` steps.
///
/// Adjacent steps on the same edge must agree in direction, cyclically
/// (reversing the edge just traversed would be a backtrack). The block view
/// groups maximal same-edge runs into `(edge, signed exponent)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    steps: Vec<Step>,
}

impl Word {
    /// Validates the cyclic non-backtracking constraint.
    pub fn from_steps(steps: Vec<Step>) -> Option<Self> {
        if steps.is_empty() {
            return None;
        }
        let n = steps.len();
        for i in 0..n {
            let (e1, d1) = steps[i];
            let (e2, d2) = steps[(i + 1) % n];
            if n >= 2 && e1 == e2 && d1 != d2 {
                return None;
            }
            if e1 == 0 {
                return None;
            }
        }
        Some(Word { steps })
    }

    /// Builds a word from a block list of (edge, nonzero signed exponent).
    pub fn from_blocks(blocks: &[(u16, i64)]) -> Option<Self> {
        let mut steps = Vec::new();
        for &(edge, exp) in blocks {
            if exp == 0 || edge == 0 {
                return None;
            }
            for _ in 0..exp.unsigned_abs() {
                steps.push((edge, exp > 0));
            }
        }
        Word::from_steps(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Total length `N`.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The cyclic block decomposition: maximal same-edge runs as
    /// `(edge, signed exponent)`, starting with the run containing the
    /// step at position 0 (its start, if the run wraps around).
    pub fn blocks(&self) -> Vec<(u16, i64)> {
        let n = self.steps.len();
        // find a block boundary; if none, the word is a single block
        let mut start = 0;
        let mut boundary_found = false;
        for i in 0..n {
            let prev = self.steps[(i + n - 1) % n];
            if prev.0 != self.steps[i].0 {
                start = i;
                boundary_found = true;
                break;
            }
        }
        if !boundary_found {
            let (edge, dir) = self.steps[0];
            let exp = if dir { n as i64 } else { -(n as i64) };
            return vec![(edge, exp)];
        }
        let mut blocks = Vec::new();
        let mut i = 0;
        while i < n {
            let (edge, dir) = self.steps[(start + i) % n];
            let mut run = 1usize;
            while i + run < n && self.steps[(start + i + run) % n].0 == edge {
                run += 1;
            }
            let exp = if dir { run as i64 } else { -(run as i64) };
            blocks.push((edge, exp));
            i += run;
        }
        blocks
    }

    /// Number of blocks `l`.
    pub fn num_blocks(&self) -> usize {
        self.blocks().len()
    }

    /// Number of blocks with negative exponent (`s`).
    pub fn negative_blocks(&self) -> usize {
        self.blocks().iter().filter(|&&(_, e)| e < 0).count()
    }

    /// The multidegree traversed by the word.
    pub fn multidegree(&self) -> MultiDegree {
        let r = self.steps.iter().map(|&(e, _)| e).max().unwrap() as usize;
        let mut m = vec![0u64; r];
        for &(e, _) in &self.steps {
            m[(e - 1) as usize] += 1;
        }
        MultiDegree::stripping_zeros(&m).expect("word traverses at least one edge")
    }

    /// The period `g`: the word is a `g`-fold repetition of a shorter word;
    /// `1` means nonperiodic.
    pub fn period(&self) -> u64 {
        let n = self.steps.len();
        for p in 1..=n {
            if n.is_multiple_of(p) && (0..n).all(|i| self.steps[i] == self.steps[(i + p) % n]) {
                return (n / p) as u64;
            }
        }
        1
    }

    /// Canonical representative of the rotation class: the lexicographically
    /// least rotation of the block list under the order (edge ascending,
    /// positive exponents before negative, then magnitude ascending).
    pub fn canonical_blocks(&self) -> Vec<(u16, i64)> {
        let blocks = self.blocks();
        let l = blocks.len();
        let key = |rot: usize| -> Vec<(u16, u8, u64)> {
            (0..l)
                .map(|i| {
                    let (e, x) = blocks[(i + rot) % l];
                    (e, if x > 0 { 0 } else { 1 }, x.unsigned_abs())
                })
                .collect()
        };
        let best = (0..l).min_by_key(|&rot| key(rot)).unwrap();
        (0..l).map(|i| blocks[(i + best) % l]).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (edge, exp)) in self.blocks().into_iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "D{edge}^{exp:+}")?;
        }
        Ok(())
    }
}

/// The period of a word; free-function form of `Word::period`.
pub fn word_period(word: &Word) -> u64 {
    word.period()
}

/// Calls `visit` with every linear block word of multidegree `m`: a choice
/// of block count `l`, cyclic edge sequence, exponent magnitudes
/// (compositions of each `m_i` into its multiplicity) and signs, exactly
/// the factorization behind the counting formulas.
fn visit_block_words<F: FnMut(&[(u16, i64)])>(m: &MultiDegree, mut visit: F) {
    let r = m.num_edges();
    let entries = m.entries();
    let n = m.total();
    if r == 1 {
        visit(&[(1, entries[0] as i64)]);
        visit(&[(1, -(entries[0] as i64))]);
        return;
    }
    for l in r as u64..=n {
        'seq: for seq in cyclic_sequences(r, l as usize) {
            let t = seq.multiplicities(r);
            for c in 0..r {
                if t[c] == 0 || t[c] > entries[c] {
                    continue 'seq;
                }
            }
            // all ways to split each m_c into t_c positive magnitudes
            let per_edge: Vec<Vec<Vec<u64>>> = (0..r)
                .map(|c| compositions(entries[c], t[c]).collect())
                .collect();
            let mut choice = vec![0usize; r];
            loop {
                // assign magnitudes to blocks in order of occurrence
                let mut next_part = vec![0usize; r];
                let mut magnitudes = Vec::with_capacity(l as usize);
                for &sym in seq.symbols() {
                    let c = (sym - 1) as usize;
                    magnitudes.push(per_edge[c][choice[c]][next_part[c]]);
                    next_part[c] += 1;
                }
                // all 2^l sign assignments
                for mask in 0u64..(1u64 << l) {
                    let mut blocks = Vec::with_capacity(l as usize);
                    for (k, &sym) in seq.symbols().iter().enumerate() {
                        let mag = magnitudes[k] as i64;
                        let exp = if mask & (1 << k) != 0 { -mag } else { mag };
                        blocks.push((sym, exp));
                    }
                    visit(&blocks);
                }
                // advance the mixed-radix composition choice
                let mut c = 0;
                loop {
                    if c == r {
                        break;
                    }
                    choice[c] += 1;
                    if choice[c] < per_edge[c].len() {
                        break;
                    }
                    choice[c] = 0;
                    c += 1;
                }
                if c == r {
                    break;
                }
            }
        }
    }
}

/// Every word of multidegree `m`: periodic or not, all rotations of the
/// step string, all sign assignments, each exactly once. The total count
/// equals `witt_f_prime(m)`.
///
/// Each linear block word contributes one string per starting offset inside
/// its first block, which is what makes the count identity structural.
pub fn enumerate_words(m: &MultiDegree) -> Vec<Word> {
    let mut out = Vec::new();
    visit_block_words(m, |blocks| {
        let word = Word::from_blocks(blocks).expect("generator emits valid block words");
        // single-block words (one edge) are constant strings: one rotation
        let first_len = if blocks.len() == 1 {
            1
        } else {
            blocks[0].1.unsigned_abs() as usize
        };
        for offset in 0..first_len {
            let mut steps = word.steps().to_vec();
            steps.rotate_left(offset);
            out.push(Word { steps });
        }
    });
    out
}

fn check_bound(m: &MultiDegree, limit: u64) -> Result<(), OracleError> {
    let total = m.total();
    if total > limit {
        Err(OracleError::BoundExceeded { total, limit })
    } else {
        Ok(())
    }
}

/// Rotation classes of words of multidegree `m`: canonical block form
/// mapped to the class period.
fn word_classes(m: &MultiDegree) -> HashMap<Vec<(u16, i64)>, u64> {
    let mut periods: HashMap<Vec<(u16, i64)>, u64> = HashMap::new();
    visit_block_words(m, |blocks| {
        let word = Word::from_blocks(blocks).expect("generator emits valid block words");
        periods
            .entry(word.canonical_blocks())
            .or_insert_with(|| word.period());
    });
    periods
}

/// Brute-force `theta`: the number of rotation classes of nonperiodic words
/// with multidegree `m`. Inversions are counted as distinct classes.
pub fn theta_oracle(m: &MultiDegree, limit: u64) -> Result<u64, OracleError> {
    check_bound(m, limit)?;
    Ok(word_classes(m).values().filter(|&&g| g == 1).count() as u64)
}

/// Canonical block forms of the nonperiodic word classes, sorted; the
/// listing companion to `theta_oracle`.
pub fn theta_class_representatives(m: &MultiDegree, limit: u64) -> Result<Vec<Word>, OracleError> {
    check_bound(m, limit)?;
    let mut reps: Vec<Word> = word_classes(m)
        .into_iter()
        .filter(|&(_, g)| g == 1)
        .map(|(blocks, _)| Word::from_blocks(&blocks).unwrap())
        .collect();
    reps.sort();
    Ok(reps)
}

/// A necklace colouring: either plain colour indices, or signed colours
/// (index plus bar) with the restriction that two colours of the same index
/// and opposite bar never sit adjacent, cyclically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NecklaceColouring {
    Plain(Vec<u16>),
    Signed(Vec<(u16, bool)>),
}

impl NecklaceColouring {
    /// Checks the variant's adjacency invariant.
    pub fn is_valid(&self) -> bool {
        match self {
            NecklaceColouring::Plain(beads) => !beads.is_empty(),
            NecklaceColouring::Signed(beads) => {
                if beads.is_empty() {
                    return false;
                }
                let n = beads.len();
                if n == 1 {
                    return true;
                }
                (0..n).all(|i| {
                    let (c1, b1) = beads[i];
                    let (c2, b2) = beads[(i + 1) % n];
                    c1 != c2 || b1 == b2
                })
            }
        }
    }
}

impl fmt::Display for NecklaceColouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NecklaceColouring::Plain(beads) => {
                for (i, b) in beads.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{b}")?;
                }
                Ok(())
            }
            NecklaceColouring::Signed(beads) => {
                for (i, (c, barred)) in beads.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    if *barred {
                        write!(f, "{c}'")?;
                    } else {
                        write!(f, "{c}")?;
                    }
                }
                Ok(())
            }
        }
    }
}

/// Generic cyclic-class counter over bead strings: enumerates every string
/// via `extend`, groups by least rotation, and counts the nonperiodic
/// classes. Kept separate from the word generator on purpose.
fn count_nonperiodic_classes<B, E>(n: usize, extend: E) -> (u64, Vec<Vec<B>>)
where
    B: Clone + Ord + std::hash::Hash,
    E: Fn(&[B]) -> Vec<B>,
{
    let mut classes: HashSet<Vec<B>> = HashSet::new();
    let mut reps: Vec<Vec<B>> = Vec::new();
    let mut current: Vec<B> = Vec::with_capacity(n);
    fn go<B, E>(
        n: usize,
        extend: &E,
        current: &mut Vec<B>,
        classes: &mut HashSet<Vec<B>>,
        reps: &mut Vec<Vec<B>>,
    ) where
        B: Clone + Ord + std::hash::Hash,
        E: Fn(&[B]) -> Vec<B>,
    {
        if current.len() == n {
            let canonical = least_rotation(current);
            if classes.insert(canonical.clone()) && is_aperiodic(&canonical) {
                reps.push(canonical);
            }
            return;
        }
        for b in extend(current) {
            current.push(b);
            go(n, extend, current, classes, reps);
            current.pop();
        }
    }
    go(n, &extend, &mut current, &mut classes, &mut reps);
    reps.sort();
    (reps.len() as u64, reps)
}

fn least_rotation<B: Clone + Ord>(beads: &[B]) -> Vec<B> {
    let n = beads.len();
    let mut best: Vec<B> = beads.to_vec();
    for k in 1..n {
        let rot: Vec<B> = (0..n).map(|i| beads[(i + k) % n].clone()).collect();
        if rot < best {
            best = rot;
        }
    }
    best
}

fn is_aperiodic<B: PartialEq>(beads: &[B]) -> bool {
    let n = beads.len();
    for p in 1..n {
        if n.is_multiple_of(p) && (0..n).all(|i| beads[i] == beads[(i + p) % n]) {
            return false;
        }
    }
    true
}

fn necklace_m_classes(m: &MultiDegree) -> (u64, Vec<Vec<u16>>) {
    let r = m.num_edges();
    let entries = m.entries().to_vec();
    let n = m.total() as usize;
    count_nonperiodic_classes(n, move |current: &[u16]| {
        let mut counts = vec![0u64; r];
        for &b in current {
            counts[(b - 1) as usize] += 1;
        }
        (1..=r as u16)
            .filter(|&c| counts[(c - 1) as usize] < entries[(c - 1) as usize])
            .collect()
    })
}

/// Brute-force classical Witt formula: rotation classes of nonperiodic
/// plain necklaces with `m_i` beads of colour `i`. Equals `witt_m(m)`.
pub fn necklace_m_oracle(m: &MultiDegree, limit: u64) -> Result<u64, OracleError> {
    check_bound(m, limit)?;
    Ok(necklace_m_classes(m).0)
}

/// Canonical representatives for `necklace_m_oracle`.
pub fn necklace_m_representatives(
    m: &MultiDegree,
    limit: u64,
) -> Result<Vec<NecklaceColouring>, OracleError> {
    check_bound(m, limit)?;
    Ok(necklace_m_classes(m)
        .1
        .into_iter()
        .map(NecklaceColouring::Plain)
        .collect())
}

fn signed_necklace_classes(m: &MultiDegree) -> (u64, Vec<Vec<(u16, bool)>>) {
    let r = m.num_edges();
    let entries = m.entries().to_vec();
    let n = m.total() as usize;
    count_nonperiodic_classes(n, move |current: &[(u16, bool)]| {
        let mut counts = vec![0u64; r];
        for &(c, _) in current {
            counts[(c - 1) as usize] += 1;
        }
        let mut options = Vec::new();
        for c in 1..=r as u16 {
            if counts[(c - 1) as usize] >= entries[(c - 1) as usize] {
                continue;
            }
            for barred in [false, true] {
                // same index with opposite bar may not sit adjacent;
                // the wrap-around pair is checked on completion below
                if let Some(&(pc, pb)) = current.last() {
                    if pc == c && pb != barred {
                        continue;
                    }
                }
                if current.len() == n - 1 && !current.is_empty() {
                    let (fc, fb) = current[0];
                    if fc == c && fb != barred {
                        continue;
                    }
                }
                options.push((c, barred));
            }
        }
        options
    })
}

/// Brute-force signed-necklace count: `2r` colours (an index with or
/// without a bar), `m_i` occurrences of index `i`, no two colours of the
/// same index and opposite bar adjacent, cyclically. Counts nonperiodic
/// rotation classes; equals `theta(m)`.
pub fn signed_necklace_oracle(m: &MultiDegree, limit: u64) -> Result<u64, OracleError> {
    check_bound(m, limit)?;
    Ok(signed_necklace_classes(m).0)
}

/// Canonical representatives for `signed_necklace_oracle`.
pub fn signed_necklace_representatives(
    m: &MultiDegree,
    limit: u64,
) -> Result<Vec<NecklaceColouring>, OracleError> {
    check_bound(m, limit)?;
    Ok(signed_necklace_classes(m)
        .1
        .into_iter()
        .map(NecklaceColouring::Signed)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path_counts::{theta, witt_f_prime};
    use num_bigint::BigInt;

    fn md(entries: &[u64]) -> MultiDegree {
        MultiDegree::new(entries.to_vec())
    }

    #[test]
    fn word_blocks_and_display() {
        let w = Word::from_blocks(&[(1, -2), (2, 1), (1, 1), (2, 3)]).unwrap();
        assert_eq!(w.len(), 7);
        assert_eq!(w.blocks(), vec![(1, -2), (2, 1), (1, 1), (2, 3)]);
        assert_eq!(w.num_blocks(), 4);
        assert_eq!(w.negative_blocks(), 1);
        assert_eq!(w.to_string(), "D1^-2 D2^+1 D1^+1 D2^+3");
    }

    #[test]
    fn word_blocks_merge_across_the_seam() {
        // the string 2 1 1 2 wraps: cyclic blocks are (1,+2), (2,+2)
        let w = Word::from_steps(vec![(2, true), (1, true), (1, true), (2, true)]).unwrap();
        let blocks = w.blocks();
        assert_eq!(blocks.len(), 2);
        assert!(blocks.contains(&(1, 2)) && blocks.contains(&(2, 2)));
    }

    #[test]
    fn backtracking_rejected() {
        assert!(Word::from_steps(vec![(1, true), (1, false)]).is_none());
        assert!(Word::from_steps(vec![(1, true), (2, true), (2, false)]).is_none());
        // same edge, same direction is a longer block, not a backtrack
        assert!(Word::from_steps(vec![(1, true), (1, true)]).is_some());
    }

    #[test]
    fn word_period_examples() {
        let w = Word::from_blocks(&[(1, 1), (2, 1), (1, 1), (2, 1)]).unwrap();
        assert_eq!(word_period(&w), 2);
        let w = Word::from_blocks(&[(1, -2), (2, 1), (1, 1), (2, 3)]).unwrap();
        assert_eq!(word_period(&w), 1);
        let w = Word::from_blocks(&[(1, 1), (2, 1), (1, 1), (2, 2)]).unwrap();
        assert_eq!(word_period(&w), 1);
        // single-edge loop traversed twice is the square of the unit loop
        let w = Word::from_blocks(&[(1, 2)]).unwrap();
        assert_eq!(word_period(&w), 2);
    }

    #[test]
    fn canonical_form_is_rotation_invariant() {
        let w = Word::from_blocks(&[(2, 1), (1, -2), (2, 3), (1, 1)]).unwrap();
        let canon = w.canonical_blocks();
        for k in 0..w.len() {
            let mut steps = w.steps().to_vec();
            steps.rotate_left(k);
            let rotated = Word::from_steps(steps).unwrap();
            assert_eq!(rotated.canonical_blocks(), canon, "rotation {k}");
        }
    }

    #[test]
    fn enumerate_words_counts() {
        assert_eq!(enumerate_words(&md(&[1, 1])).len(), 8);
        assert_eq!(enumerate_words(&md(&[2, 2])).len(), 48);
        assert_eq!(enumerate_words(&md(&[1, 1, 1])).len(), 48);
        assert_eq!(enumerate_words(&md(&[2, 3])).len(), 100);
    }

    #[test]
    fn enumerate_words_matches_f_prime_and_has_no_duplicates() {
        for m in [md(&[2, 2]), md(&[3, 2]), md(&[1, 2, 2]), md(&[2, 2, 2])] {
            let words = enumerate_words(&m);
            let distinct: HashSet<_> = words.iter().cloned().collect();
            assert_eq!(distinct.len(), words.len(), "duplicate words for {m}");
            assert_eq!(
                BigInt::from(words.len() as u64),
                witt_f_prime(&m),
                "count vs F' for {m}"
            );
            for w in &words {
                assert_eq!(w.multidegree(), m);
            }
        }
    }

    #[test]
    fn rotation_orbits_account_for_every_word() {
        // grouping the enumerated words by canonical form, each class of
        // period g contains exactly N/g distinct strings
        for m in [md(&[2, 2]), md(&[2, 3]), md(&[1, 1, 2])] {
            let words = enumerate_words(&m);
            let n = m.total();
            let mut orbit_sizes: HashMap<Vec<(u16, i64)>, u64> = HashMap::new();
            let mut periods: HashMap<Vec<(u16, i64)>, u64> = HashMap::new();
            for w in &words {
                let key = w.canonical_blocks();
                *orbit_sizes.entry(key.clone()).or_insert(0) += 1;
                periods.entry(key).or_insert_with(|| w.period());
            }
            for (key, size) in &orbit_sizes {
                assert_eq!(*size, n / periods[key], "class {key:?} of {m}");
            }
            let total: u64 = orbit_sizes.values().sum();
            assert_eq!(total, words.len() as u64);
        }
    }

    #[test]
    fn theta_oracle_examples() {
        assert_eq!(theta_oracle(&md(&[1, 1]), 12).unwrap(), 4);
        assert_eq!(theta_oracle(&md(&[2, 2]), 12).unwrap(), 10);
        assert_eq!(theta_oracle(&md(&[1]), 12).unwrap(), 2);
        assert_eq!(theta_oracle(&md(&[3]), 12).unwrap(), 0);
    }

    #[test]
    fn theta_oracle_agrees_with_formula_on_small_inputs() {
        for m in [
            md(&[1, 1]),
            md(&[2, 2]),
            md(&[3, 3]),
            md(&[2, 4]),
            md(&[1, 1, 1]),
            md(&[2, 2, 2]),
        ] {
            assert_eq!(
                BigInt::from(theta_oracle(&m, 12).unwrap()),
                theta(&m),
                "m = {m}"
            );
        }
    }

    #[test]
    fn oracle_refuses_oversized_input() {
        let err = theta_oracle(&md(&[8, 8]), 12).unwrap_err();
        assert_eq!(
            err,
            OracleError::BoundExceeded {
                total: 16,
                limit: 12
            }
        );
        assert!(necklace_m_oracle(&md(&[13]), 12).is_err());
        assert!(signed_necklace_oracle(&md(&[7, 7]), 12).is_err());
    }

    #[test]
    fn necklace_oracle_examples() {
        assert_eq!(necklace_m_oracle(&md(&[2, 2]), 12).unwrap(), 1);
        assert_eq!(necklace_m_oracle(&md(&[1, 1]), 12).unwrap(), 1);
        assert_eq!(necklace_m_oracle(&md(&[1, 2]), 12).unwrap(), 1);
        assert_eq!(necklace_m_oracle(&md(&[3, 3]), 12).unwrap(), 3);
        assert_eq!(necklace_m_oracle(&md(&[1]), 12).unwrap(), 1);
        assert_eq!(necklace_m_oracle(&md(&[4]), 12).unwrap(), 0);
    }

    #[test]
    fn signed_necklace_oracle_examples() {
        assert_eq!(signed_necklace_oracle(&md(&[1, 1]), 12).unwrap(), 4);
        assert_eq!(signed_necklace_oracle(&md(&[2, 2]), 12).unwrap(), 10);
        assert_eq!(signed_necklace_oracle(&md(&[1, 1, 1]), 12).unwrap(), 16);
        assert_eq!(signed_necklace_oracle(&md(&[1]), 12).unwrap(), 2);
        assert_eq!(signed_necklace_oracle(&md(&[2]), 12).unwrap(), 0);
    }

    #[test]
    fn signed_colouring_validation() {
        let ok = NecklaceColouring::Signed(vec![(1, false), (2, true), (1, false)]);
        assert!(ok.is_valid());
        let bad = NecklaceColouring::Signed(vec![(1, false), (1, true), (2, false)]);
        assert!(!bad.is_valid());
        // wrap-around adjacency counts too
        let bad_wrap = NecklaceColouring::Signed(vec![(1, true), (2, false), (1, false)]);
        assert!(!bad_wrap.is_valid());
    }

    #[test]
    fn class_representatives_are_canonical_and_complete() {
        let reps = theta_class_representatives(&md(&[2, 2]), 12).unwrap();
        assert_eq!(reps.len(), 10);
        for w in &reps {
            assert_eq!(w.blocks(), w.canonical_blocks());
            assert_eq!(w.period(), 1);
        }
    }
}
