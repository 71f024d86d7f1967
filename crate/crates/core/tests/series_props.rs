use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use ulis_core::series::{
    closed_form_u231, indecomposable_from_total, ps_mul, ps_sqrt, solve_u231,
    total_from_indecomposable, u231_residual, PowerSeries,
};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

// sqrt(1 + x) = sum binom(1/2, k) x^k, composed with x = a - 1 by Horner's rule.
fn sqrt_by_binomial_series(a: &PowerSeries) -> PowerSeries {
    let order = a.order();
    let x = a - &PowerSeries::constant(1, order);
    let mut coeffs = vec![BigRational::from_integer(1.into())];
    for k in 1..=order {
        let prev = coeffs[k - 1].clone();
        let k = k as i64;
        coeffs.push(prev * (q(1, 2) - q(k - 1, 1)) / q(k, 1));
    }
    let mut acc = PowerSeries::new(vec![coeffs[order].clone()], order);
    for c in coeffs[..order].iter().rev() {
        acc = &ps_mul(&acc, &x) + &PowerSeries::new(vec![c.clone()], order);
    }
    acc
}

#[test]
fn sqrt_agrees_with_binomial_series() {
    let a = PowerSeries::from_ints(&[1, -2, -1, -2, -4], 12);
    assert_eq!(ps_sqrt(&a).unwrap(), sqrt_by_binomial_series(&a));
    let r = PowerSeries::from_ints(&[1, -4, 2, 0, 1], 25);
    assert_eq!(ps_sqrt(&r).unwrap(), sqrt_by_binomial_series(&r));
}

#[test]
fn u231_routes_agree_to_order_60() {
    let u = solve_u231(60);
    assert!(u231_residual(&u).is_zero());
    assert_eq!(u, closed_form_u231(60).unwrap());
    let ints = u.integer_coeffs().unwrap();
    let head: Vec<BigInt> = [1, 1, 1, 2, 5, 13, 35, 97, 275, 794]
        .map(BigInt::from)
        .to_vec();
    assert_eq!(ints[..10], head[..]);
}

#[test]
fn indecomposable_round_trip() {
    let u = solve_u231(30);
    let u1 = indecomposable_from_total(&u).unwrap();
    assert!(u1.coeff(0).unwrap().is_zero());
    assert_eq!(total_from_indecomposable(&u1).unwrap(), u);
}

fn arb_series() -> impl Strategy<Value = PowerSeries> {
    proptest::collection::vec(-5i64..=5, 1..8).prop_map(|mut v| {
        v[0] = 1;
        PowerSeries::from_ints(&v, 20)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn sqrt_squares_back(a in arb_series()) {
        let s = ps_sqrt(&a).unwrap();
        prop_assert_eq!(ps_mul(&s, &s), a);
    }

    #[test]
    fn reciprocal_is_inverse(a in arb_series()) {
        let r = a.reciprocal().unwrap();
        prop_assert_eq!(ps_mul(&a, &r), PowerSeries::constant(1, 20));
    }
}
