use proptest::prelude::*;
use ulis_core::perm::all_permutations;
use ulis_core::Permutation;

fn pat(s: &str) -> Permutation {
    s.parse().unwrap()
}

// Containment by trying every k-subset of positions.
fn contains_by_subsets(p: &Permutation, q: &Permutation) -> bool {
    let (n, k) = (p.len(), q.len());
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .any(|mask| {
            let sub: Vec<u32> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| p.values()[i])
                .collect();
            Permutation::standardize(&sub) == *q
        })
}

fn patterns() -> Vec<Permutation> {
    let mut out: Vec<Permutation> = all_permutations(3).collect();
    out.extend(["2413", "3142", "1234", "4321", "2143"].map(pat));
    out
}

#[test]
fn containment_matches_subset_oracle() {
    let qs = patterns();
    for n in 0..=8 {
        for p in all_permutations(n) {
            for q in &qs {
                assert_eq!(p.contains(q), contains_by_subsets(&p, q), "{p} vs {q}");
            }
        }
    }
}

#[test]
fn witness_is_an_occurrence() {
    for p in all_permutations(7) {
        for q in all_permutations(3) {
            if let Some(pos) = p.find_occurrence(&q) {
                let sub: Vec<u32> = pos.iter().map(|&i| p.at(i)).collect();
                assert_eq!(Permutation::standardize(&sub), q);
                assert!(pos.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }
}

#[test]
fn avoidance_respects_symmetries() {
    for q in all_permutations(3) {
        let (qi, qr) = (q.inverse(), q.reverse_complement());
        for n in 0..=8 {
            for p in all_permutations(n) {
                let a = p.avoids(&q);
                assert_eq!(a, p.inverse().avoids(&qi), "{p} {q} inverse");
                assert_eq!(a, p.reverse_complement().avoids(&qr), "{p} {q} revc");
            }
        }
    }
}

#[test]
fn skew_blocks_round_trip() {
    for n in 0..=8 {
        for p in all_permutations(n) {
            let blocks = p.skew_blocks();
            assert_eq!(Permutation::from_skew_blocks(&blocks), p);
            assert!(blocks.iter().all(Permutation::is_skew_indecomposable));
            assert_eq!(p.is_skew_indecomposable(), blocks.len() == 1);
        }
    }
}

#[test]
fn spec_examples() {
    assert!(pat("3752416").contains(&pat("2413")));
    assert!(!pat("2314").contains(&pat("321")));
    assert_eq!(pat("231").inverse(), pat("312"));
    assert_eq!(pat("2314").reverse_complement(), pat("1423"));
    assert_eq!(pat("21").direct_sum(&pat("12")), pat("2134"));
    assert!(pat("3142").is_sum_indecomposable().unwrap());
    assert!(!pat("21453").is_sum_indecomposable().unwrap());
    assert!(Permutation::default().is_sum_indecomposable().is_err());
    let blocks: Vec<String> = pat("6743521")
        .skew_blocks()
        .iter()
        .map(|b| b.to_string())
        .collect();
    assert_eq!(blocks, ["1,2", "2,1,3", "1", "1"]);
    assert_eq!(pat("346512").skew_blocks().len(), 2);
    let p = pat("21354");
    let values = |pos: Vec<usize>| -> Vec<u32> { pos.into_iter().map(|i| p.at(i)).collect() };
    assert_eq!(values(p.left_to_right_maxima()), [2, 3, 5]);
    assert_eq!(values(p.right_to_left_minima()), [1, 3, 4]);
}

fn arb_perm(max: usize) -> impl Strategy<Value = Permutation> {
    (0..=max)
        .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

proptest! {
    #[test]
    fn direct_sum_is_associative(a in arb_perm(6), b in arb_perm(6), c in arb_perm(6)) {
        prop_assert_eq!(a.direct_sum(&b).direct_sum(&c), a.direct_sum(&b.direct_sum(&c)));
    }

    #[test]
    fn direct_sum_is_decomposable(a in arb_perm(6), b in arb_perm(6)) {
        prop_assume!(!a.is_empty() && !b.is_empty());
        prop_assert!(!a.direct_sum(&b).is_sum_indecomposable().unwrap());
    }

    #[test]
    fn symmetries_are_involutive(p in arb_perm(12)) {
        prop_assert_eq!(p.inverse().inverse(), p.clone());
        prop_assert_eq!(p.reverse_complement().reverse_complement(), p.clone());
        prop_assert_eq!(p.is_involution(), p.inverse() == p);
    }

    #[test]
    fn display_parses_back(p in arb_perm(15)) {
        prop_assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p);
    }

    #[test]
    fn sum_components_round_trip(p in arb_perm(10)) {
        let joined = p.sum_components().iter().fold(Permutation::default(), |acc, c| acc.direct_sum(c));
        prop_assert_eq!(joined, p);
    }
}
