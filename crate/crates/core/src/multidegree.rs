//! Multidegrees: vectors of strictly positive edge multiplicities.
//!
//! A multidegree records how many times each edge of a sub-bouquet is
//! traversed. Zero entries are stripped at the API boundary; every stored
//! entry is at least one.

use std::fmt;

/// The grading of all counters in this crate: entries `(m_1, ..., m_r)`
/// with every `m_i >= 1` and `r >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDegree {
    entries: Vec<u64>,
}

impl MultiDegree {
    /// Builds a multidegree from strictly positive entries.
    ///
    /// Panics if `entries` is empty or contains a zero; callers holding raw
    /// vectors with possible zeros should go through `stripping_zeros`.
    pub fn new(entries: Vec<u64>) -> Self {
        assert!(
            !entries.is_empty(),
            "multidegree must have at least one entry"
        );
        assert!(
            entries.iter().all(|&m| m >= 1),
            "multidegree entries must be >= 1, got {entries:?}"
        );
        MultiDegree { entries }
    }

    /// Strips zero entries from a raw vector; `None` when nothing is left.
    pub fn stripping_zeros(raw: &[u64]) -> Option<Self> {
        let entries: Vec<u64> = raw.iter().copied().filter(|&m| m > 0).collect();
        if entries.is_empty() {
            None
        } else {
            Some(MultiDegree { entries })
        }
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// Number of edges `r`.
    pub fn num_edges(&self) -> usize {
        self.entries.len()
    }

    /// Total path length `N = m_1 + ... + m_r`.
    pub fn total(&self) -> u64 {
        self.entries.iter().sum()
    }

    /// Greatest common divisor of the entries.
    pub fn gcd(&self) -> u64 {
        self.entries.iter().copied().fold(0, num_integer::gcd)
    }

    /// The common divisors of the entries, ascending, always containing 1.
    ///
    /// Trial division up to the gcd; inputs are desk-scale.
    pub fn common_divisors(&self) -> Vec<u64> {
        let g = self.gcd();
        (1..=g).filter(|d| g.is_multiple_of(*d)).collect()
    }

    /// Entrywise quotient by a common divisor.
    pub fn divided_by(&self, g: u64) -> Self {
        assert!(g >= 1, "divisor must be >= 1");
        assert!(
            self.entries.iter().all(|&m| m % g == 0),
            "{g} does not divide all entries of {self}"
        );
        MultiDegree {
            entries: self.entries.iter().map(|&m| m / g).collect(),
        }
    }

    /// Entrywise half; requires all entries even.
    pub fn halved(&self) -> Self {
        self.divided_by(2)
    }

    pub fn all_even(&self) -> bool {
        self.entries.iter().all(|&m| m % 2 == 0)
    }

    pub fn all_odd(&self) -> bool {
        self.entries.iter().all(|&m| m % 2 == 1)
    }

    /// Entries are neither all odd nor all even.
    pub fn mixed_parity(&self) -> bool {
        !self.all_even() && !self.all_odd()
    }

    /// Entries sorted ascending; canonical cache key under the verified
    /// permutation symmetry of the counters.
    pub fn sorted_entries(&self) -> Vec<u64> {
        let mut v = self.entries.clone();
        v.sort_unstable();
        v
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, m) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}
