use std::collections::HashMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ulis_core::bijections::dyck::all_dyck_paths;
use ulis_core::bijections::tree::PlaneTree;
use ulis_core::sampler::{estimate_ank, estimate_ank_parallel, sample_dyck_path};

#[test]
fn semilength_three_is_uniform() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let trials = 200_000u32;
    let mut seen: HashMap<String, u32> = HashMap::new();
    for _ in 0..trials {
        *seen
            .entry(sample_dyck_path(3, &mut rng).to_string())
            .or_default() += 1;
    }
    assert_eq!(seen.len(), 5);
    let p = 0.2;
    let se = (p * (1.0 - p) / trials as f64).sqrt();
    for (path, hits) in seen {
        let f = hits as f64 / trials as f64;
        assert!((f - p).abs() < 5.0 * se, "{path}: {f}");
    }
}

#[test]
fn estimates_match_exact_fractions() {
    // exact a(10, k) over all 4862 trees on 10 vertices
    let trees: Vec<PlaneTree> = all_dyck_paths(9).iter().map(PlaneTree::from_dyck).collect();
    let exact = |k: usize| {
        trees
            .iter()
            .filter(|t| t.max_depth_leaf_count().1 == k)
            .count() as f64
            / trees.len() as f64
    };
    let rep = estimate_ank(10, 4, 100_000, 5);
    for k in 1..=4 {
        let e = &rep.estimates[k - 1];
        assert!(
            (e.fraction - exact(k)).abs() < 5.0 * e.std_error.max(1e-3),
            "k={k}"
        );
    }
}

#[test]
fn streams_are_reproducible() {
    assert_eq!(estimate_ank(50, 6, 3000, 77), estimate_ank(50, 6, 3000, 77));
    let a = estimate_ank_parallel(50, 6, 3000, 77, 4);
    assert_eq!(a, estimate_ank_parallel(50, 6, 3000, 77, 4));
    assert_eq!(a.streams, 4);
    assert_ne!(a.estimates, estimate_ank(50, 6, 3000, 77).estimates);
}
