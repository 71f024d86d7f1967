//! Truncated formal power series with exact rational coefficients, and the
//! generating-function computations built on them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::enumerate::CountTable;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SeriesError {
    #[error("coefficient {index} requested beyond truncation order {order}")]
    BeyondOrder { index: usize, order: usize },
    #[error("division by a series with zero constant term")]
    ZeroConstantTerm,
    #[error("square root needs constant term 1, found {0}")]
    SqrtConstantTerm(String),
    #[error("expected constant term 1, found {0}")]
    ConstantTermNotOne(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("invalid bracket: p({lo}) = {f_lo} and p({hi}) = {f_hi} do not differ in sign")]
    InvalidBracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },
    #[error("growth profile needs positive counts; n = {0} has count 0")]
    NonPositiveCount(usize),
}

/// Coefficients `0..=order`; anything above `order` is unknown, not zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl PowerSeries {
    /// Pads with zeros or truncates so that exactly `order + 1` coefficients are kept.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| q(c)).collect(), order)
    }

    pub fn from_biguints(coeffs: &[BigUint], order: usize) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|c| BigRational::from_integer(BigInt::from(c.clone())))
                .collect(),
            order,
        )
    }

    pub fn constant(c: i64, order: usize) -> Self {
        Self::from_ints(&[c], order)
    }

    /// The series `z`.
    pub fn z(order: usize) -> Self {
        Self::from_ints(&[0, 1], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, index: usize) -> Result<&BigRational, SeriesError> {
        self.coeffs.get(index).ok_or(SeriesError::BeyondOrder {
            index,
            order: self.order(),
        })
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    /// Coefficients as integers, if all of them are.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `z^k`; the order grows by `k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Divides by `z^k`, which requires the first `k` coefficients to vanish.
    pub fn shift_down(&self, k: usize) -> Result<Self, SeriesError> {
        if let Some(i) = self.coeffs.iter().take(k).position(|c| !c.is_zero()) {
            return Err(SeriesError::Inconsistent(format!(
                "coefficient {i} is nonzero, cannot divide by z^{k}"
            )));
        }
        if k > self.order() {
            return Err(SeriesError::BeyondOrder {
                index: k,
                order: self.order(),
            });
        }
        Ok(Self {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    pub fn checked_div(&self, other: &PowerSeries) -> Result<Self, SeriesError> {
        let inv = other.reciprocal()?;
        Ok(self * &inv)
    }

    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let n = self.order();
        let mut out: Vec<BigRational> = Vec::with_capacity(n + 1);
        out.push(c0.recip());
        for k in 1..=n {
            let mut s = BigRational::zero();
            for j in 1..=k {
                s += &self.coeffs[j] * &out[k - j];
            }
            out.push(-s / c0);
        }
        Ok(Self { coeffs: out })
    }

    /// The square root with constant term 1, solved degree by degree from
    /// `2 s_k = a_k - sum_{0<j<k} s_j s_{k-j}`.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::SqrtConstantTerm(self.coeffs[0].to_string()));
        }
        let n = self.order();
        let two = q(2);
        let mut s: Vec<BigRational> = Vec::with_capacity(n + 1);
        s.push(BigRational::one());
        for k in 1..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..k {
                acc -= &s[j] * &s[k - j];
            }
            s.push(acc / &two);
        }
        Ok(Self { coeffs: s })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k)
                    .filter(|&j| !self.coeffs[j].is_zero())
                    .map(|j| &self.coeffs[j] * &rhs.coeffs[k - j])
                    .fold(BigRational::zero(), |a, b| a + b)
            })
            .collect();
        PowerSeries { coeffs }
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*z")?,
                _ => write!(f, "{mag}*z^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

pub fn ps_add(a: &PowerSeries, b: &PowerSeries) -> PowerSeries {
    a + b
}

pub fn ps_sub(a: &PowerSeries, b: &PowerSeries) -> PowerSeries {
    a - b
}

pub fn ps_mul(a: &PowerSeries, b: &PowerSeries) -> PowerSeries {
    a * b
}

pub fn ps_div(a: &PowerSeries, b: &PowerSeries) -> Result<PowerSeries, SeriesError> {
    a.checked_div(b)
}

pub fn ps_sqrt(a: &PowerSeries) -> Result<PowerSeries, SeriesError> {
    a.sqrt()
}

/// Radicand `1 - 4z + 2z^2 + z^4` of the closed form for u_231.
pub fn u231_radicand() -> Vec<i64> {
    vec![1, -4, 2, 0, 1]
}

/// Solves `u = 1 + z u (u - z)` by fixed-point iteration; each pass pins one
/// more coefficient, so `order + 1` passes are exact.
pub fn solve_u231(order: usize) -> PowerSeries {
    let one = PowerSeries::constant(1, order);
    let z = PowerSeries::z(order);
    let mut u = one.clone();
    for _ in 0..=order {
        u = &one + &(&z * &(&u * &(&u - &z)));
    }
    u
}

/// Residual `u - 1 - z u (u - z)`; zero up to `order` for the true solution.
pub fn u231_residual(u: &PowerSeries) -> PowerSeries {
    let order = u.order();
    let one = PowerSeries::constant(1, order);
    let z = PowerSeries::z(order);
    &(u - &one) - &(&z * &(u * &(u - &z)))
}

/// `(1 + z^2 - sqrt(1 - 4z + 2z^2 + z^4)) / (2z)`, expanded exactly.
pub fn closed_form_u231(order: usize) -> Result<PowerSeries, SeriesError> {
    closed_form_u231_with(order, ps_sqrt)
}

/// Same as [`closed_form_u231`] with a caller-supplied square root, so that
/// verification can be exercised against a faulty implementation.
pub fn closed_form_u231_with(
    order: usize,
    sqrt: impl Fn(&PowerSeries) -> Result<PowerSeries, SeriesError>,
) -> Result<PowerSeries, SeriesError> {
    let inner = order + 1;
    let radicand = PowerSeries::from_ints(&u231_radicand(), inner);
    let numerator = &PowerSeries::from_ints(&[1, 0, 1], inner) - &sqrt(&radicand)?;
    if !numerator.coeff(0)?.is_zero() {
        return Err(SeriesError::Inconsistent(format!(
            "numerator constant term is {} instead of 0",
            numerator.coeff(0)?
        )));
    }
    let halved = numerator
        .shift_down(1)?
        .scale(&BigRational::new(1.into(), 2.into()));
    Ok(halved)
}

/// u_1 = 1 - 1/u, the series of indecomposable objects when `u = 1/(1 - u_1)`.
pub fn indecomposable_from_total(u: &PowerSeries) -> Result<PowerSeries, SeriesError> {
    if !u.coeff(0)?.is_one() {
        return Err(SeriesError::ConstantTermNotOne(u.coeff(0)?.to_string()));
    }
    let one = PowerSeries::constant(1, u.order());
    Ok(&one - &u.reciprocal()?)
}

/// `1 / (1 - u1)`; inverse of [`indecomposable_from_total`].
pub fn total_from_indecomposable(u1: &PowerSeries) -> Result<PowerSeries, SeriesError> {
    let one = PowerSeries::constant(1, u1.order());
    (&one - u1).reciprocal()
}

fn eval_poly(poly: &[f64], x: f64) -> f64 {
    poly.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// Bisection on `[lo, hi]` (coefficients in increasing degree) until the
/// bracket is no wider than `tol`; returns the bracket midpoint.
pub fn find_real_root(
    poly: &[BigRational],
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<f64, SeriesError> {
    let coeffs: Vec<f64> = poly
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::NAN))
        .collect();
    let (mut a, mut b) = (lo, hi);
    let (mut fa, fb) = (eval_poly(&coeffs, a), eval_poly(&coeffs, b));
    // NaN counts as no sign change
    if (fa * fb).partial_cmp(&0.0) != Some(std::cmp::Ordering::Less) {
        return Err(SeriesError::InvalidBracket {
            lo,
            hi,
            f_lo: fa,
            f_hi: fb,
        });
    }
    while b - a > tol {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = eval_poly(&coeffs, m);
        if fm == 0.0 {
            return Ok(m);
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}

pub fn rational_poly(coeffs: &[i64]) -> Vec<BigRational> {
    coeffs.iter().map(|&c| q(c)).collect()
}

/// `(n, count^(1/n))` for every row with n ≥ 1; n = 0 has no n-th root and is skipped.
pub fn growth_profile(counts: &CountTable) -> Result<Vec<(usize, f64)>, SeriesError> {
    let mut out = Vec::new();
    for (n, c) in &counts.rows {
        if c.is_zero() {
            return Err(SeriesError::NonPositiveCount(*n));
        }
        if *n == 0 {
            continue;
        }
        // saturates to infinity past ~1e308
        let v = c.to_f64().unwrap_or(f64::INFINITY);
        out.push((*n, v.powf(1.0 / *n as f64)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &PowerSeries) -> Vec<i64> {
        s.integer_coeffs()
            .unwrap()
            .iter()
            .map(|c| c.to_i64().unwrap())
            .collect()
    }

    #[test]
    fn ring_examples() {
        let a = PowerSeries::from_ints(&[1, 1], 4);
        let b = PowerSeries::from_ints(&[1, -1], 4);
        assert_eq!(ints(&ps_mul(&a, &b)), vec![1, 0, -1, 0, 0]);
        let geo = ps_div(
            &PowerSeries::constant(1, 6),
            &PowerSeries::from_ints(&[1, -1], 6),
        )
        .unwrap();
        assert_eq!(ints(&geo), vec![1; 7]);
        let c = PowerSeries::from_ints(&[1, -4, 2], 10);
        assert_eq!(
            ints(&(&c * &c.reciprocal().unwrap())),
            ints(&PowerSeries::constant(1, 10))
        );
        assert_eq!(
            ps_div(&a, &PowerSeries::z(4)),
            Err(SeriesError::ZeroConstantTerm)
        );
    }

    #[test]
    fn mixed_orders_truncate() {
        let a = PowerSeries::from_ints(&[1, 2, 3], 5);
        let b = PowerSeries::from_ints(&[1, 1], 2);
        assert_eq!(ps_add(&a, &b).order(), 2);
        assert_eq!(ps_sub(&a, &b).order(), 2);
        assert_eq!(
            PowerSeries::from_ints(&[1], 2).coeff(3),
            Err(SeriesError::BeyondOrder { index: 3, order: 2 })
        );
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(
            ints(&ps_sqrt(&PowerSeries::constant(1, 5)).unwrap()),
            vec![1, 0, 0, 0, 0, 0]
        );
        let sq = PowerSeries::from_ints(&[1, 2, 1], 6);
        assert_eq!(ints(&ps_sqrt(&sq).unwrap()), vec![1, 1, 0, 0, 0, 0, 0]);
        assert!(matches!(
            ps_sqrt(&PowerSeries::from_ints(&[4, 1], 3)),
            Err(SeriesError::SqrtConstantTerm(_))
        ));
    }

    #[test]
    fn u231_routes() {
        let expected = vec![1, 1, 1, 2, 5, 13, 35, 97, 275, 794];
        assert_eq!(ints(&solve_u231(9)), expected);
        assert_eq!(ints(&closed_form_u231(9).unwrap()), expected);
        assert!(u231_residual(&solve_u231(15)).is_zero());
    }

    #[test]
    fn indecomposable_examples() {
        let geo = PowerSeries::from_ints(&[1; 8], 7);
        assert_eq!(
            ints(&indecomposable_from_total(&geo).unwrap()),
            vec![0, 1, 0, 0, 0, 0, 0, 0]
        );
        assert!(matches!(
            indecomposable_from_total(&PowerSeries::from_ints(&[2, 1], 3)),
            Err(SeriesError::ConstantTermNotOne(_))
        ));
    }

    #[test]
    fn roots() {
        let r = find_real_root(&rational_poly(&[1, -2]), 0.0, 1.0, 1e-12).unwrap();
        assert!((r - 0.5).abs() <= 1e-12);
        let r = find_real_root(&rational_poly(&[1, -4]), 0.0, 1.0, 1e-12).unwrap();
        assert!((r - 0.25).abs() <= 1e-12);
        assert!(matches!(
            find_real_root(&rational_poly(&[1, 1]), 0.0, 1.0, 1e-9),
            Err(SeriesError::InvalidBracket { .. })
        ));
    }

    #[test]
    fn display_is_readable() {
        let s = PowerSeries::from_ints(&[1, -2, 0, 3], 3);
        assert_eq!(s.to_string(), "1 - 2*z + 3*z^3 + O(z^4)");
    }
}
