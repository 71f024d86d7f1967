//! Longest increasing subsequences: ranks, exact LIS counts and the ULIS predicate.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::perm::Permutation;

/// Per-position ranks together with the LIS length and the exact number of
/// increasing subsequences of that length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankProfile {
    /// `ranks[i]` is the length of the longest increasing subsequence ending at position `i + 1`.
    pub ranks: Vec<usize>,
    pub lis_length: usize,
    pub lis_count: BigUint,
}

/// O(n²) dynamic programme over positions. The empty permutation has
/// `lis_length` 0 and `lis_count` 1 (the empty subsequence).
pub fn rank_profile(p: &Permutation) -> RankProfile {
    let v = p.values();
    let n = v.len();
    let mut ranks = vec![0usize; n];
    let mut ways: Vec<BigUint> = vec![BigUint::zero(); n];
    for i in 0..n {
        let mut best = 0;
        let mut count = BigUint::one();
        for j in 0..i {
            if v[j] < v[i] {
                if ranks[j] > best {
                    best = ranks[j];
                    count = ways[j].clone();
                } else if ranks[j] == best {
                    count += &ways[j];
                }
            }
        }
        ranks[i] = best + 1;
        ways[i] = count;
    }
    let lis_length = ranks.iter().copied().max().unwrap_or(0);
    let lis_count = if n == 0 {
        BigUint::one()
    } else {
        ranks
            .iter()
            .zip(&ways)
            .filter(|(&r, _)| r == lis_length)
            .map(|(_, w)| w)
            .sum()
    };
    RankProfile {
        ranks,
        lis_length,
        lis_count,
    }
}

pub fn lis_length(p: &Permutation) -> usize {
    lis_length_of(p.values())
}

pub fn lis_count(p: &Permutation) -> BigUint {
    rank_profile(p).lis_count
}

pub fn has_ulis(p: &Permutation) -> bool {
    has_ulis_values(p.values())
}

/// Patience sorting, O(n log n).
pub(crate) fn lis_length_of(v: &[u32]) -> usize {
    let mut tails: Vec<u32> = Vec::with_capacity(v.len());
    for &x in v {
        match tails.binary_search(&x) {
            Ok(i) | Err(i) if i == tails.len() => tails.push(x),
            Ok(i) | Err(i) => tails[i] = x,
        }
    }
    tails.len()
}

/// ULIS test on raw one-line values. Counts saturate at 2, which is exact for
/// the predicate and keeps the enumerator's inner loop allocation-free.
pub(crate) fn has_ulis_values(v: &[u32]) -> bool {
    const STACK: usize = 64;
    let n = v.len();
    if n > STACK {
        return rank_profile(&Permutation::standardize(v))
            .lis_count
            .is_one();
    }
    let mut rank = [0u8; STACK];
    let mut ways = [0u8; STACK];
    let mut best_rank = 0u8;
    let mut best_ways = 1u8;
    for i in 0..n {
        let mut r = 0u8;
        let mut w = 1u8;
        for j in 0..i {
            if v[j] < v[i] {
                if rank[j] > r {
                    r = rank[j];
                    w = ways[j];
                } else if rank[j] == r {
                    w = (w + ways[j]).min(2);
                }
            }
        }
        rank[i] = r + 1;
        ways[i] = w;
        if r + 1 > best_rank {
            best_rank = r + 1;
            best_ways = w;
        } else if r + 1 == best_rank {
            best_ways = (best_ways + w).min(2);
        }
    }
    best_ways == 1
}

/// Positions (1-based, left to right) grouped by rank; entry `r - 1` holds rank `r`.
pub fn rank_classes(p: &Permutation) -> Vec<Vec<usize>> {
    let profile = rank_profile(p);
    let mut classes = vec![Vec::new(); profile.lis_length];
    for (i, &r) in profile.ranks.iter().enumerate() {
        classes[r - 1].push(i + 1);
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm;

    #[test]
    fn ranks_of_worked_example() {
        let p = perm![3, 5, 1, 6, 2, 4];
        assert_eq!(rank_profile(&p).ranks, vec![1, 2, 1, 3, 2, 3]);
        let values: Vec<Vec<u32>> = rank_classes(&p)
            .iter()
            .map(|c| c.iter().map(|&i| p.at(i)).collect())
            .collect();
        assert_eq!(values, vec![vec![3, 1], vec![5, 2], vec![6, 4]]);
    }

    #[test]
    fn lis_counts() {
        let a = rank_profile(&perm![2, 3, 1, 4]);
        assert_eq!((a.lis_length, a.lis_count), (3, BigUint::one()));
        let b = rank_profile(&perm![2, 4, 6, 1, 3, 5]);
        assert_eq!((b.lis_length, b.lis_count), (3, BigUint::from(4u32)));
        let e = rank_profile(&Permutation::default());
        assert_eq!((e.lis_length, e.lis_count), (0, BigUint::one()));
    }

    #[test]
    fn ulis_predicate() {
        assert!(has_ulis(&perm![2, 3, 1, 4]));
        assert!(!has_ulis(&perm![2, 4, 6, 1, 3, 5]));
        assert!(has_ulis(&Permutation::default()));
        assert!(!has_ulis(&perm![2, 1]));
    }

    #[test]
    fn classes_small() {
        assert_eq!(
            rank_classes(&Permutation::identity(4)),
            vec![vec![1], vec![2], vec![3], vec![4]]
        );
        assert_eq!(rank_classes(&perm![2, 1]), vec![vec![1, 2]]);
    }

    #[test]
    fn patience_agrees_with_dp() {
        let p = perm![4, 1, 7, 3, 2, 6, 5, 8];
        assert_eq!(lis_length(&p), rank_profile(&p).lis_length);
    }
}
