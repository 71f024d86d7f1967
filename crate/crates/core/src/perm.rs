//! Permutations in one-line notation, pattern containment and the
//! structural decompositions (direct sums, skew blocks) used throughout.
//!
//! Positions and values are 1-based whenever they are reported to a caller.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Errors raised while building a permutation from raw values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("duplicate value {value} at index {index}")]
    Duplicate { index: usize, value: i64 },
    #[error("value {value} at index {index} is outside 1..={len}")]
    OutOfRange {
        index: usize,
        value: i64,
        len: usize,
    },
    #[error("cannot parse entry {index} ({token:?}) as an integer")]
    Parse { index: usize, token: String },
    #[error("operation requires a nonempty permutation")]
    Empty,
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    /// Validates that `values` is a rearrangement of `1..=n`.
    ///
    /// The diagnostic names the first offending index (1-based).
    pub fn new(values: Vec<u32>) -> Result<Self, PermError> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for (i, &v) in values.iter().enumerate() {
            let index = i + 1;
            if v == 0 || v as usize > n {
                return Err(PermError::OutOfRange {
                    index,
                    value: v as i64,
                    len: n,
                });
            }
            if seen[v as usize] {
                return Err(PermError::Duplicate {
                    index,
                    value: v as i64,
                });
            }
            seen[v as usize] = true;
        }
        Ok(Self { values })
    }

    /// Same as [`Permutation::new`] but accepts signed input, so that zero and
    /// negative entries produce a diagnostic instead of wrapping.
    pub fn from_signed(values: &[i64]) -> Result<Self, PermError> {
        let n = values.len();
        let mut out = Vec::with_capacity(n);
        for (i, &v) in values.iter().enumerate() {
            if v < 1 || v as u64 > n as u64 {
                return Err(PermError::OutOfRange {
                    index: i + 1,
                    value: v,
                    len: n,
                });
            }
            out.push(v as u32);
        }
        Self::new(out)
    }

    /// Builds a permutation without validation. Callers guarantee the invariant.
    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Self::new(values.clone()).is_ok());
        Self { values }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            values: (1..=n as u32).collect(),
        }
    }

    /// The decreasing permutation `n, n-1, ..., 1`.
    pub fn decreasing(n: usize) -> Self {
        Self {
            values: (1..=n as u32).rev().collect(),
        }
    }

    /// Replaces arbitrary distinct values by their ranks (pattern normalization).
    pub fn standardize<T: Ord + Copy>(seq: &[T]) -> Self {
        let mut idx: Vec<usize> = (0..seq.len()).collect();
        idx.sort_by_key(|&i| seq[i]);
        let mut values = vec![0u32; seq.len()];
        for (rank, &i) in idx.iter().enumerate() {
            values[i] = rank as u32 + 1;
        }
        Self { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn into_values(self) -> Vec<u32> {
        self.values
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.values[i - 1]
    }

    /// True iff some subsequence of `self` is order-isomorphic to `q`.
    pub fn contains(&self, q: &Permutation) -> bool {
        self.find_occurrence(q).is_some()
    }

    pub fn avoids(&self, q: &Permutation) -> bool {
        !self.contains(q)
    }

    /// Returns the 1-based positions of the lexicographically first
    /// occurrence of `q`, if any. The empty pattern occurs trivially.
    pub fn find_occurrence(&self, q: &Permutation) -> Option<Vec<usize>> {
        let k = q.len();
        if k > self.len() {
            return None;
        }
        let mut chosen = Vec::with_capacity(k);
        if search(&self.values, &q.values, 0, &mut chosen) {
            Some(chosen.iter().map(|i| i + 1).collect())
        } else {
            None
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Self { values: inv }
    }

    /// Entry `i` of the result is `n + 1 - p[n + 1 - i]`.
    pub fn reverse_complement(&self) -> Self {
        let n = self.len() as u32;
        Self {
            values: self.values.iter().rev().map(|&v| n + 1 - v).collect(),
        }
    }

    /// `self ⊕ other`: `self` on the smallest values followed by `other`
    /// shifted above them.
    pub fn direct_sum(&self, other: &Permutation) -> Self {
        let m = self.len() as u32;
        let mut values = self.values.clone();
        values.extend(other.values.iter().map(|&v| v + m));
        Self { values }
    }

    /// `self ⊖ other`: `self` on the largest values followed by `other` below them.
    pub fn skew_sum(&self, other: &Permutation) -> Self {
        let n = other.len() as u32;
        let mut values: Vec<u32> = self.values.iter().map(|&v| v + n).collect();
        values.extend_from_slice(&other.values);
        Self { values }
    }

    /// Sum-indecomposable: no cut `0 < k < n` puts exactly `1..=k` before it.
    pub fn is_sum_indecomposable(&self) -> Result<bool, PermError> {
        if self.is_empty() {
            return Err(PermError::Empty);
        }
        Ok(self.sum_cuts().is_empty())
    }

    /// The sum (⊕) components, left to right, each pattern-normalized.
    pub fn sum_components(&self) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut start = 0;
        for cut in self
            .sum_cuts()
            .into_iter()
            .chain(std::iter::once(self.len()))
        {
            if cut > start {
                out.push(Permutation::standardize(&self.values[start..cut]));
            }
            start = cut;
        }
        out
    }

    // Proper prefix lengths k with max(prefix) == k.
    fn sum_cuts(&self) -> Vec<usize> {
        let mut cuts = Vec::new();
        let mut max = 0;
        let n = self.len();
        for (i, &v) in self.values.iter().enumerate() {
            max = max.max(v as usize);
            if max == i + 1 && i + 1 < n {
                cuts.push(i + 1);
            }
        }
        cuts
    }

    /// The skew blocks of `self`, each pattern-normalized. Empty input has no blocks.
    pub fn skew_blocks(&self) -> Vec<Permutation> {
        let n = self.len();
        let mut out = Vec::new();
        let mut start = 0;
        let mut min = u32::MAX;
        for (i, &v) in self.values.iter().enumerate() {
            min = min.min(v);
            // The prefix 0..=i holds exactly the top i+1 values.
            if min as usize == n - i {
                out.push(Permutation::standardize(&self.values[start..=i]));
                start = i + 1;
            }
        }
        out
    }

    /// Inverse of [`Permutation::skew_blocks`].
    pub fn from_skew_blocks(blocks: &[Permutation]) -> Self {
        blocks
            .iter()
            .rev()
            .fold(Permutation::default(), |acc, b| b.skew_sum(&acc))
    }

    pub fn is_skew_indecomposable(&self) -> bool {
        self.skew_blocks().len() == 1
    }

    pub fn is_involution(&self) -> bool {
        self.values
            .iter()
            .enumerate()
            .all(|(i, &v)| self.values[v as usize - 1] as usize == i + 1)
    }

    pub fn fixed_points(&self) -> usize {
        self.values
            .iter()
            .enumerate()
            .filter(|(i, &v)| v as usize == i + 1)
            .count()
    }

    /// 1-based positions of the left-to-right maxima.
    pub fn left_to_right_maxima(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut max = 0;
        for (i, &v) in self.values.iter().enumerate() {
            if v > max {
                max = v;
                out.push(i + 1);
            }
        }
        out
    }

    /// 1-based positions of the right-to-left minima, in increasing order.
    pub fn right_to_left_minima(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut min = u32::MAX;
        for (i, &v) in self.values.iter().enumerate().rev() {
            if v < min {
                min = v;
                out.push(i + 1);
            }
        }
        out.reverse();
        out
    }

    /// 1-based position of the value `v`.
    pub fn position_of(&self, v: u32) -> Option<usize> {
        self.values.iter().position(|&x| x == v).map(|i| i + 1)
    }
}

/// Every permutation of length n in lexicographic order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut cur: Option<Vec<u32>> = Some((1..=n as u32).collect());
    std::iter::from_fn(move || {
        let out = cur.take()?;
        let mut next = out.clone();
        if next_permutation(&mut next) {
            cur = Some(next);
        }
        Some(Permutation { values: out })
    })
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v
        .iter()
        .rposition(|&x| x > v[i])
        .expect("pivot has a larger successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

// Pruned backtracking over index choices; `chosen` holds 0-based indices.
fn search(p: &[u32], q: &[u32], from: usize, chosen: &mut Vec<usize>) -> bool {
    let r = chosen.len();
    if r == q.len() {
        return true;
    }
    let remaining = q.len() - r;
    for i in from..=p.len() - remaining {
        let ok = chosen
            .iter()
            .enumerate()
            .all(|(s, &j)| (p[j] < p[i]) == (q[s] < q[r]));
        if ok {
            chosen.push(i);
            if search(p, q, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Parses comma-separated one-line notation (`"3,5,1,2,4"`). A string of
/// digits without commas (`"2314"`) is accepted as a shorthand when every
/// entry is a single digit; the empty string is the empty permutation.
impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::default());
        }
        let tokens: Vec<String> = if s.contains(',') {
            s.split(',').map(|t| t.trim().to_string()).collect()
        } else {
            s.chars().map(|c| c.to_string()).collect()
        };
        let mut values = Vec::with_capacity(tokens.len());
        for (i, tok) in tokens.iter().enumerate() {
            let v: i64 = tok.parse().map_err(|_| PermError::Parse {
                index: i + 1,
                token: tok.clone(),
            })?;
            values.push(v);
        }
        Self::from_signed(&values)
    }
}

/// Convenience constructor for tests and fixed patterns; panics on invalid input.
#[macro_export]
macro_rules! perm {
    ($($v:expr),* $(,)?) => {
        $crate::perm::Permutation::new(vec![$($v),*]).expect("valid permutation literal")
    };
}
