use num_bigint::BigUint;
use proptest::prelude::*;
use ulis_core::lis::{has_ulis, lis_count, lis_length, rank_classes, rank_profile};
use ulis_core::perm::all_permutations;
use ulis_core::Permutation;

// (length, count) of longest increasing subsequences by checking every subset.
fn lis_by_subsets(p: &Permutation) -> (usize, u64) {
    let v = p.values();
    let n = v.len();
    let (mut best, mut count) = (0usize, 0u64);
    for mask in 0u32..1 << n {
        let len = mask.count_ones() as usize;
        if len < best {
            continue;
        }
        let mut last = 0;
        let increasing = (0..n).filter(|i| mask >> i & 1 == 1).all(|i| {
            let ok = v[i] > last;
            last = v[i];
            ok
        });
        if increasing {
            if len > best {
                best = len;
                count = 0;
            }
            count += 1;
        }
    }
    (best, count)
}

#[test]
fn lis_matches_subset_oracle() {
    for n in 0..=9 {
        for p in all_permutations(n) {
            let (len, count) = lis_by_subsets(&p);
            let prof = rank_profile(&p);
            assert_eq!(prof.lis_length, len, "{p}");
            assert_eq!(lis_length(&p), len, "{p}");
            assert_eq!(prof.lis_count, BigUint::from(count), "{p}");
            assert_eq!(has_ulis(&p), count == 1, "{p}");
        }
    }
}

#[test]
fn ulis_invariant_under_inverse_and_revc() {
    for n in 0..=8 {
        for p in all_permutations(n) {
            let u = has_ulis(&p);
            assert_eq!(u, has_ulis(&p.inverse()), "{p}");
            assert_eq!(u, has_ulis(&p.reverse_complement()), "{p}");
        }
    }
}

#[test]
fn rank_classes_of_321_avoiders_are_increasing() {
    let q = "321".parse().unwrap();
    for n in 0..=9 {
        for p in all_permutations(n).filter(|p| p.avoids(&q)) {
            for class in rank_classes(&p) {
                let vals: Vec<u32> = class.iter().map(|&i| p.at(i)).collect();
                assert!(
                    vals.windows(2).all(|w| w[0] > w[1]),
                    "{p}: rank class {vals:?}"
                );
                assert!(class.len() <= 2, "{p}");
            }
        }
    }
}

#[test]
fn examples() {
    let p: Permutation = "2413".parse().unwrap();
    assert_eq!((lis_length(&p), lis_count(&p)), (2, BigUint::from(3u32)));
    assert!(!has_ulis(&"1324".parse().unwrap()));
    assert!(has_ulis(&Permutation::identity(5)));
    assert!(!has_ulis(&Permutation::decreasing(3)));
    assert!(has_ulis(&Permutation::default()));
}

fn arb_perm(max: usize) -> impl Strategy<Value = Permutation> {
    (0..=max)
        .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

proptest! {
    #[test]
    fn direct_sum_laws(p in arb_perm(6), r in arb_perm(6)) {
        let s = p.direct_sum(&r);
        prop_assert_eq!(lis_length(&s), lis_length(&p) + lis_length(&r));
        prop_assert_eq!(lis_count(&s), lis_count(&p) * lis_count(&r));
        prop_assert_eq!(has_ulis(&s), has_ulis(&p) && has_ulis(&r));
    }

    #[test]
    fn long_inputs_agree_with_rank_profile(p in arb_perm(80)) {
        prop_assert_eq!(has_ulis(&p), rank_profile(&p).lis_count == BigUint::from(1u32));
        prop_assert_eq!(lis_length(&p), rank_profile(&p).lis_length);
    }
}
