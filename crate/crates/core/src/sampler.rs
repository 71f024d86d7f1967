//! Uniform random Dyck paths and plane trees, and Monte Carlo estimates of
//! the distribution of the number of deepest leaves.
//!
//! Randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`), seeded with
//! `SeedableRng::seed_from_u64(seed)`. Single-stream mode uses stream 0 of
//! that generator; parallel mode gives worker `w` its own ChaCha stream `w + 1`
//! with the same seed, and splits trials into contiguous equal chunks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bijections::dyck::{DyckPath, Step};
use crate::bijections::tree::PlaneTree;

pub const RNG_ALGORITHM: &str = "ChaCha8Rng (rand_chacha 0.9), seed_from_u64";
pub const DEFAULT_KMAX: usize = 8;

/// Draws a uniform word with `n` U steps and `n + 1` D steps, rotates it to
/// start right after the first position where it attains its minimum height,
/// and drops the final D. Each Dyck path arises from exactly 2n + 1 words.
pub fn sample_dyck_path<R: Rng + ?Sized>(semilength: usize, rng: &mut R) -> DyckPath {
    let n = semilength;
    let len = 2 * n + 1;
    let mut word = Vec::with_capacity(len);
    let (mut ups, mut downs) = (n, n + 1);
    for _ in 0..len {
        let pick = rng.random_range(0..ups + downs);
        if pick < ups {
            word.push(Step::U);
            ups -= 1;
        } else {
            word.push(Step::D);
            downs -= 1;
        }
    }
    // first index at which the running height hits its minimum
    let mut h = 0i64;
    let mut min = 0i64;
    let mut at = 0usize;
    for (i, s) in word.iter().enumerate() {
        h += s.delta();
        if h < min {
            min = h;
            at = i;
        }
    }
    let mut steps = Vec::with_capacity(2 * n);
    steps.extend_from_slice(&word[at + 1..]);
    steps.extend_from_slice(&word[..at]);
    DyckPath::from_steps_unchecked(steps)
}

pub fn dyck_to_tree(d: &DyckPath) -> PlaneTree {
    PlaneTree::from_dyck(d)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Estimate {
    pub k: usize,
    pub hits: u64,
    pub fraction: f64,
    pub std_error: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleReport {
    /// Tree size in vertices.
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    pub k_max: usize,
    pub rng: String,
    /// Number of ChaCha streams used; 1 means single-stream mode.
    pub streams: usize,
    pub estimates: Vec<Estimate>,
    /// Trees with more than `k_max` deepest leaves.
    pub overflow: Estimate,
}

impl SampleReport {
    fn from_counts(n: usize, k_max: usize, seed: u64, streams: usize, counts: &[u64]) -> Self {
        let trials: u64 = counts.iter().sum();
        let est = |k: usize, hits: u64| {
            let p = hits as f64 / trials as f64;
            Estimate {
                k,
                hits,
                fraction: p,
                std_error: (p * (1.0 - p) / trials as f64).sqrt(),
            }
        };
        Self {
            n,
            trials,
            seed,
            k_max,
            rng: RNG_ALGORITHM.to_string(),
            streams,
            estimates: (1..=k_max).map(|k| est(k, counts[k - 1])).collect(),
            overflow: est(k_max + 1, counts[k_max]),
        }
    }

    pub fn fraction(&self, k: usize) -> Option<f64> {
        self.estimates.get(k.checked_sub(1)?).map(|e| e.fraction)
    }
}

fn tally<R: Rng>(n: usize, k_max: usize, trials: u64, rng: &mut R) -> Vec<u64> {
    let mut counts = vec![0u64; k_max + 1];
    for _ in 0..trials {
        let tree = dyck_to_tree(&sample_dyck_path(n - 1, rng));
        let (_, k) = tree.max_depth_leaf_count();
        counts[(k - 1).min(k_max)] += 1;
    }
    counts
}

/// Single-stream estimate of a(n, k) for k = 1..=k_max; reproducible for fixed arguments.
pub fn estimate_ank(n: usize, k_max: usize, trials: u64, seed: u64) -> SampleReport {
    assert!(
        n >= 1 && trials >= 1 && k_max >= 1,
        "need n ≥ 1, trials ≥ 1, k_max ≥ 1"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let counts = tally(n, k_max, trials, &mut rng);
    SampleReport::from_counts(n, k_max, seed, 1, &counts)
}

/// Parallel estimate over `workers` substreams; deterministic for fixed
/// arguments including `workers`, but different from the single-stream result.
pub fn estimate_ank_parallel(
    n: usize,
    k_max: usize,
    trials: u64,
    seed: u64,
    workers: usize,
) -> SampleReport {
    assert!(
        n >= 1 && trials >= 1 && k_max >= 1,
        "need n ≥ 1, trials ≥ 1, k_max ≥ 1"
    );
    let workers = workers.max(1);
    let per = trials / workers as u64;
    let extra = trials % workers as u64;
    let partials: Vec<Vec<u64>> = (0..workers)
        .into_par_iter()
        .map(|w| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(w as u64 + 1);
            let t = per + u64::from((w as u64) < extra);
            tally(n, k_max, t, &mut rng)
        })
        .collect();
    let mut counts = vec![0u64; k_max + 1];
    for p in partials {
        for (c, x) in counts.iter_mut().zip(p) {
            *c += x;
        }
    }
    SampleReport::from_counts(n, k_max, seed, workers, &counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_semilengths() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(sample_dyck_path(0, &mut rng).steps().is_empty());
        for _ in 0..20 {
            assert_eq!(sample_dyck_path(1, &mut rng).to_string(), "UD");
        }
    }

    #[test]
    fn small_trees() {
        let r = estimate_ank(2, 4, 100, 3);
        assert_eq!(r.fraction(1), Some(1.0));
        let r = estimate_ank(1, 2, 10, 3);
        assert_eq!(r.fraction(1), Some(1.0));
    }

    #[test]
    fn counts_partition_trials() {
        let r = estimate_ank(12, 3, 5000, 9);
        let hits: u64 = r.estimates.iter().map(|e| e.hits).sum::<u64>() + r.overflow.hits;
        assert_eq!(hits, 5000);
    }

    #[test]
    fn deterministic() {
        assert_eq!(estimate_ank(30, 8, 2000, 42), estimate_ank(30, 8, 2000, 42));
        assert_eq!(
            estimate_ank_parallel(30, 8, 2000, 42, 3),
            estimate_ank_parallel(30, 8, 2000, 42, 3)
        );
        assert_eq!(estimate_ank_parallel(30, 8, 2000, 42, 3).trials, 2000);
    }
}
