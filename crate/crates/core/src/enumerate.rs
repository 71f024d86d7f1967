//! Exhaustive generation of permutations avoiding a pattern of length three,
//! with the brute-force counters built on top of it.
//!
//! Generation extends a prefix one value at a time. Every pair of prefix
//! entries that could start an occurrence of the pattern forbids an interval
//! of values for any later entry; those intervals are kept as a bitmask per
//! depth, so the extension test is a single mask lookup.

use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bijections::dyck::Step;
use crate::lis::has_ulis_values;
use crate::perm::Permutation;

/// Default maximum length for avoider streams (C_14 = 2,674,440 objects).
pub const DEFAULT_CEILING: usize = 14;
/// Hard limit imposed by the 64-bit value masks.
pub const MAX_LENGTH: usize = 62;
/// Largest n accepted by the 2^n exhaustive ballot counter.
pub const BALLOT_EXHAUSTIVE_MAX: usize = 24;
/// Largest n accepted by the prefix-pruned ballot walk.
pub const BALLOT_PRUNED_MAX: usize = 36;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("pattern {0} has length {1}; only patterns of length 3 are supported")]
    PatternLength(String, usize),
    #[error("n = {n} exceeds the configured ceiling {ceiling}; raise the ceiling explicitly (cost grows like 4^n)")]
    AboveCeiling { n: usize, ceiling: usize },
    #[error("ballot length n = {n} outside 1..={max}")]
    BallotRange { n: usize, max: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ObjectClass {
    /// q-avoiders with a ULIS, u_n(q).
    Permutations,
    /// q-avoiding involutions with a ULIS, i_n(q).
    Involutions,
    /// Bidirectional ballot sequences, B_n.
    Ballot,
    /// All q-avoiders.
    AvoidersTotal,
    /// All q-avoiding involutions, I_n(q).
    InvolutionAvoidersTotal,
}

impl ObjectClass {
    pub fn name(self) -> &'static str {
        match self {
            ObjectClass::Permutations => "permutations",
            ObjectClass::Involutions => "involutions",
            ObjectClass::Ballot => "ballot",
            ObjectClass::AvoidersTotal => "avoiders-total",
            ObjectClass::InvolutionAvoidersTotal => "involution-avoiders-total",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Brute,
    Series,
    TreeDp,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Series => "series",
            Method::TreeDp => "tree-dp",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for ObjectClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exact counts indexed by n, with the method that produced them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    /// `None` for pattern-free classes (ballot sequences).
    pub pattern: Option<Permutation>,
    pub object_class: ObjectClass,
    pub method: Method,
    /// Sorted by n without gaps.
    pub rows: Vec<(usize, BigUint)>,
}

impl CountTable {
    pub fn new(
        pattern: Option<Permutation>,
        object_class: ObjectClass,
        method: Method,
        rows: Vec<(usize, BigUint)>,
    ) -> Self {
        debug_assert!(rows.windows(2).all(|w| w[1].0 == w[0].0 + 1));
        Self {
            pattern,
            object_class,
            method,
            rows,
        }
    }

    pub fn get(&self, n: usize) -> Option<&BigUint> {
        self.rows.iter().find(|(m, _)| *m == n).map(|(_, c)| c)
    }

    pub fn counts(&self) -> Vec<BigUint> {
        self.rows.iter().map(|(_, c)| c.clone()).collect()
    }
}

// For a fixed pattern q1 q2 q3, a prefix pair (x, y) with (x < y) == (q1 < q2)
// forbids every later value on the side of {x, y} that q3 occupies.
#[derive(Clone, Copy, Debug)]
struct Pattern3 {
    ascending_pair: bool,
    last: LastSlot,
}

#[derive(Clone, Copy, Debug)]
enum LastSlot {
    Below,
    Between,
    Above,
}

impl Pattern3 {
    fn new(q: &Permutation) -> Result<Self, EnumError> {
        if q.len() != 3 {
            return Err(EnumError::PatternLength(q.to_string(), q.len()));
        }
        let v = q.values();
        let last = if v[2] == 1 {
            LastSlot::Below
        } else if v[2] == 2 {
            LastSlot::Between
        } else {
            LastSlot::Above
        };
        Ok(Self {
            ascending_pair: v[0] < v[1],
            last,
        })
    }

    fn forbidden(&self, x: u32, y: u32, full: u64) -> u64 {
        if (x < y) != self.ascending_pair {
            return 0;
        }
        let (lo, hi) = if x < y { (x, y) } else { (y, x) };
        let below = |v: u32| (1u64 << v) - 1; // bits 0..v
        match self.last {
            LastSlot::Below => below(lo) & !1,
            LastSlot::Between => below(hi) & !below(lo + 1),
            LastSlot::Above => full & !below(hi + 1),
        }
    }
}

/// Lexicographic stream of the q-avoiding permutations of length n.
pub struct Avoiders {
    n: usize,
    pattern: Pattern3,
    full: u64,
    first: Option<u32>,
    prefix: Vec<u32>,
    forbid: Vec<u64>,
    cand: Vec<u32>,
    used: u64,
    pending_pop: bool,
    done: bool,
}

impl Avoiders {
    fn new(q: &Permutation, n: usize, first: Option<u32>) -> Result<Self, EnumError> {
        let pattern = Pattern3::new(q)?;
        if n > MAX_LENGTH {
            return Err(EnumError::AboveCeiling {
                n,
                ceiling: MAX_LENGTH,
            });
        }
        let full = ((1u64 << (n + 1)) - 1) & !1;
        Ok(Self {
            n,
            pattern,
            full,
            first,
            prefix: Vec::with_capacity(n),
            forbid: vec![0; n + 1],
            cand: vec![1; n + 1],
            used: 0,
            pending_pop: false,
            done: false,
        })
    }

    /// Advances to the next avoider and exposes its one-line values.
    pub fn next_values(&mut self) -> Option<&[u32]> {
        if self.done {
            return None;
        }
        if self.pending_pop {
            let v = self.prefix.pop().unwrap();
            self.used ^= 1u64 << v;
            self.pending_pop = false;
        }
        if self.n == 0 {
            self.done = true;
            return Some(&self.prefix);
        }
        loop {
            let d = self.prefix.len();
            let mut avail =
                self.full & !self.used & !self.forbid[d] & !((1u64 << self.cand[d]) - 1);
            if d == 0 {
                if let Some(f) = self.first {
                    avail &= 1u64 << f;
                }
            }
            if avail == 0 {
                if d == 0 {
                    self.done = true;
                    return None;
                }
                let v = self.prefix.pop().unwrap();
                self.used ^= 1u64 << v;
                self.cand[d - 1] = v + 1;
                continue;
            }
            let v = avail.trailing_zeros();
            if d + 1 == self.n {
                self.cand[d] = v + 1;
                self.prefix.push(v);
                self.used |= 1u64 << v;
                self.pending_pop = true;
                return Some(&self.prefix);
            }
            let mut f = self.forbid[d];
            for &x in &self.prefix {
                f |= self.pattern.forbidden(x, v, self.full);
            }
            self.prefix.push(v);
            self.used |= 1u64 << v;
            self.forbid[d + 1] = f;
            self.cand[d + 1] = 1;
        }
    }
}

impl Iterator for Avoiders {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        self.next_values()
            .map(|v| Permutation::from_vec_unchecked(v.to_vec()))
    }
}

/// Brute-force counters with a length ceiling and optional work splitting.
///
/// With `threads > 1` the generation tree is split by its first value and
/// the per-subtree counts are added, so results never depend on scheduling.
#[derive(Debug, Clone)]
pub struct Enumerator {
    ceiling: usize,
    threads: usize,
}

impl Default for Enumerator {
    fn default() -> Self {
        Self {
            ceiling: DEFAULT_CEILING,
            threads: 1,
        }
    }
}

impl Enumerator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_ceiling(mut self, ceiling: usize) -> Self {
        self.ceiling = ceiling.min(MAX_LENGTH);
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    pub fn ceiling(&self) -> usize {
        self.ceiling
    }

    fn check(&self, n: usize) -> Result<(), EnumError> {
        if n > self.ceiling {
            return Err(EnumError::AboveCeiling {
                n,
                ceiling: self.ceiling,
            });
        }
        Ok(())
    }

    /// Streams every q-avoider of length n exactly once, lexicographically.
    pub fn avoiders(&self, q: &Permutation, n: usize) -> Result<Avoiders, EnumError> {
        self.check(n)?;
        Avoiders::new(q, n, None)
    }

    /// The part of the stream whose first entry is `first`.
    pub fn avoiders_starting_with(
        &self,
        q: &Permutation,
        n: usize,
        first: u32,
    ) -> Result<Avoiders, EnumError> {
        self.check(n)?;
        Avoiders::new(q, n, Some(first))
    }

    /// Number of q-avoiders of length n satisfying `keep`.
    pub fn count_where<F>(&self, q: &Permutation, n: usize, keep: F) -> Result<BigUint, EnumError>
    where
        F: Fn(&[u32]) -> bool + Sync,
    {
        self.check(n)?;
        Pattern3::new(q)?;
        let count_subtree = |first: Option<u32>| -> u64 {
            let mut it = Avoiders::new(q, n, first).expect("validated above");
            let mut c = 0u64;
            while let Some(v) = it.next_values() {
                if keep(v) {
                    c += 1;
                }
            }
            c
        };
        let total = if self.threads <= 1 || n < 2 {
            count_subtree(None)
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(self.threads)
                .build()
                .expect("thread pool");
            pool.install(|| {
                (1..=n as u32)
                    .into_par_iter()
                    .map(|first| count_subtree(Some(first)))
                    .sum()
            })
        };
        Ok(BigUint::from(total))
    }

    /// All q-avoiders of length n (C_n).
    pub fn count_avoiders(&self, q: &Permutation, n: usize) -> Result<BigUint, EnumError> {
        self.count_where(q, n, |_| true)
    }

    /// u_n(q).
    pub fn count_ulis_avoiders(&self, q: &Permutation, n: usize) -> Result<BigUint, EnumError> {
        self.count_where(q, n, has_ulis_values)
    }

    /// i_n(q).
    pub fn count_ulis_involutions(&self, q: &Permutation, n: usize) -> Result<BigUint, EnumError> {
        self.count_where(q, n, |v| is_involution_values(v) && has_ulis_values(v))
    }

    /// I_n(q).
    pub fn count_involution_avoiders(
        &self,
        q: &Permutation,
        n: usize,
    ) -> Result<BigUint, EnumError> {
        self.count_where(q, n, is_involution_values)
    }

    /// Brute-force table for `min_n..=max_n`.
    pub fn table(
        &self,
        q: &Permutation,
        class: ObjectClass,
        min_n: usize,
        max_n: usize,
    ) -> Result<CountTable, EnumError> {
        let mut rows = Vec::new();
        for n in min_n..=max_n {
            let c = match class {
                ObjectClass::Permutations => self.count_ulis_avoiders(q, n)?,
                ObjectClass::Involutions => self.count_ulis_involutions(q, n)?,
                ObjectClass::AvoidersTotal => self.count_avoiders(q, n)?,
                ObjectClass::InvolutionAvoidersTotal => self.count_involution_avoiders(q, n)?,
                ObjectClass::Ballot => count_bidirectional_ballot(n)?,
            };
            rows.push((n, c));
        }
        let pattern = (class != ObjectClass::Ballot).then(|| q.clone());
        Ok(CountTable::new(pattern, class, Method::Brute, rows))
    }
}

fn is_involution_values(v: &[u32]) -> bool {
    v.iter()
        .enumerate()
        .all(|(i, &x)| v[x as usize - 1] as usize == i + 1)
}

/// Convenience wrapper over [`Enumerator::avoiders`] with the default ceiling.
pub fn avoiders(q: &Permutation, n: usize) -> Result<Avoiders, EnumError> {
    Enumerator::default().avoiders(q, n)
}

pub fn count_ulis_avoiders(q: &Permutation, n: usize) -> Result<BigUint, EnumError> {
    Enumerator::default().count_ulis_avoiders(q, n)
}

pub fn count_ulis_involutions(q: &Permutation, n: usize) -> Result<BigUint, EnumError> {
    Enumerator::default().count_ulis_involutions(q, n)
}

pub fn count_involution_avoiders(q: &Permutation, n: usize) -> Result<BigUint, EnumError> {
    Enumerator::default().count_involution_avoiders(q, n)
}

/// A word over {U, D}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BallotPath {
    pub steps: Vec<Step>,
}

impl BallotPath {
    pub fn new(steps: Vec<Step>) -> Self {
        Self { steps }
    }

    /// Every nonempty prefix and every nonempty suffix has strictly more U than D.
    pub fn is_bidirectional(&self) -> bool {
        let heights: Vec<i64> = self
            .steps
            .iter()
            .scan(0i64, |h, s| {
                *h += s.delta();
                Some(*h)
            })
            .collect();
        let Some(&total) = heights.last() else {
            return true;
        };
        // suffix starting after prefix j has height total - h_j
        total > 0
            && heights.iter().all(|&h| h > 0)
            && heights[..heights.len() - 1].iter().all(|&h| h < total)
    }
}

impl fmt::Display for BallotPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// B_n by checking all 2^n words.
pub fn count_bidirectional_ballot(n: usize) -> Result<BigUint, EnumError> {
    if n == 0 || n > BALLOT_EXHAUSTIVE_MAX {
        return Err(EnumError::BallotRange {
            n,
            max: BALLOT_EXHAUSTIVE_MAX,
        });
    }
    let mut count = 0u64;
    for word in 0u32..(1u32 << n) {
        // bit i set = step i is U
        let mut h = 0i32;
        let mut ok = true;
        let mut max_proper = 0i32;
        for i in 0..n {
            h += if word >> i & 1 == 1 { 1 } else { -1 };
            if h <= 0 {
                ok = false;
                break;
            }
            if i + 1 < n {
                max_proper = max_proper.max(h);
            }
        }
        // suffix after prefix j has height h - h_j, so proper prefixes stay below h
        if ok && max_proper < h {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}

/// B_n by a depth-first walk that abandons a prefix as soon as it touches
/// zero or can no longer finish strictly above its running maximum.
pub fn count_bidirectional_ballot_pruned(n: usize) -> Result<BigUint, EnumError> {
    if n == 0 || n > BALLOT_PRUNED_MAX {
        return Err(EnumError::BallotRange {
            n,
            max: BALLOT_PRUNED_MAX,
        });
    }
    fn walk(remaining: usize, h: i64, max_prefix: i64) -> u64 {
        if remaining == 0 {
            return 1;
        }
        if remaining == 1 {
            // The last step must lift the walk strictly above every earlier prefix.
            return u64::from(h + 1 > max_prefix);
        }
        if h + remaining as i64 <= max_prefix {
            return 0;
        }
        let up = walk(remaining - 1, h + 1, max_prefix.max(h + 1));
        let down = if h > 1 {
            walk(remaining - 1, h - 1, max_prefix)
        } else {
            0
        };
        up + down
    }
    if n == 1 {
        return Ok(BigUint::from(1u32));
    }
    // The first step is forced to be U.
    Ok(BigUint::from(walk(n - 1, 1, 1)))
}
