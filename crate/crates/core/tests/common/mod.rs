#![allow(dead_code)]

pub mod golden;

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// `(f, n) -> published percent string`, gathered from every panel.
pub fn published(table: &str) -> BTreeMap<(u64, u64), String> {
    let mut out = BTreeMap::new();
    let mut header: Vec<u64> = Vec::new();
    for line in table.lines() {
        let mut fields = line.split(',');
        let first = fields.next().unwrap();
        if first == "f" {
            header = fields.map(|s| s.parse().unwrap()).collect();
        } else {
            let f: u64 = first.parse().unwrap();
            for (n, v) in header.iter().zip(fields) {
                out.insert((f, *n), v.to_string());
            }
        }
    }
    out
}

/// Exact binomial coefficient.
pub fn choose_exact(n: u64, k: u64) -> BigUint {
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Exact dyadic value of a finite positive `f64` as `(mantissa, exponent)`
/// with `x = mantissa / 2^exponent`.
pub fn dyadic(x: f64) -> (BigInt, u64) {
    let mut m = x;
    let mut e = 0u64;
    while m.fract() != 0.0 {
        m *= 2.0;
        e += 1;
    }
    (BigInt::from(m as u64), e)
}

/// Numerator over `2^(e n)` of the exact binomial lower tail
/// `sum_{k=0}^{f} C(n,k) (1-r)^k r^(n-k)` on the binary value of `r`.
fn cdf_numerator(f: u64, n: u64, r: f64) -> (BigInt, u64) {
    let (a, e) = dyadic(r);
    let one = BigInt::one() << e;
    let b = &one - &a;
    let mut sum = BigInt::zero();
    for k in 0..=f {
        let c = BigInt::from(choose_exact(n, k));
        sum += c
            * num_traits::pow::pow(b.clone(), k as usize)
            * num_traits::pow::pow(a.clone(), (n - k) as usize);
    }
    (sum, e * n)
}

/// Exact lower tail as a rational with a power-of-two denominator.
pub fn cdf_exact(f: u64, n: u64, r: f64) -> BigRational {
    let (num, shift) = cdf_numerator(f, n, r);
    BigRational::new_raw(num, BigInt::one() << shift)
}

/// `num / 2^shift` rounded to `f64`.
pub fn dyadic_to_f64(num: &BigInt, shift: u64) -> f64 {
    let bits = num.bits();
    let drop = bits.saturating_sub(62);
    let top: i64 = (num >> drop).try_into().unwrap();
    top as f64 * 2f64.powi((drop as i64 - shift as i64) as i32)
}

pub fn to_f64(x: &BigRational) -> f64 {
    let denom = x.denom();
    if denom.bits() > 0 && denom.trailing_zeros() == Some(denom.bits() - 1) {
        return dyadic_to_f64(x.numer(), denom.bits() - 1);
    }
    x.to_f64().unwrap()
}

pub fn rel_err(got: f64, want: f64) -> f64 {
    if want == 0.0 {
        got.abs()
    } else {
        ((got - want) / want).abs()
    }
}

/// One-decimal percent with round-half-away-from-zero.
pub fn pct1(x: f64) -> String {
    format!("{:.1}", (x * 1000.0).round() / 10.0)
}
