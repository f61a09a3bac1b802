//! Exact signs of real cyclotomic numbers by adaptive-precision evaluation.
//!
//! Values are evaluated in fixed point: an integer `v` stands for `v / 2^p`.
//! Cosines of `2πk/N` are computed with 32 guard bits and rounded, so every
//! table entry is within 2 units of the last place. The evaluation is repeated at
//! doubled precision until the error interval excludes zero.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::number::CycNumber;
use crate::error::{Error, Result};

const GUARD: u64 = 32;

fn atan_inv(x: u64, prec: u64) -> BigInt {
    // atan(1/x) = Σ (-1)^k / ((2k+1) x^(2k+1))
    let one = BigInt::one() << prec;
    let x2 = BigInt::from(x * x);
    let mut power = &one / BigInt::from(x);
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    sum
}

fn pi_fixed(prec: u64) -> BigInt {
    BigInt::from(16) * atan_inv(5, prec) - BigInt::from(4) * atan_inv(239, prec)
}

fn cos_fixed(theta: &BigInt, prec: u64) -> BigInt {
    let one = BigInt::one() << prec;
    let th2 = (theta * theta) >> prec;
    let mut term = one.clone();
    let mut sum = one;
    let mut m: u64 = 1;
    loop {
        term = -((&term * &th2) >> prec) / BigInt::from((2 * m - 1) * (2 * m));
        if term.is_zero() {
            break;
        }
        sum += &term;
        m += 1;
    }
    sum
}

/// `cos(2πk/N)` for `k = 0..N`, each within 2 ulps at precision `prec`.
fn cos_table(n: u32, prec: u64) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u64), Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&(n, prec)) {
        return t.clone();
    }
    let work = prec + GUARD;
    let two_pi = pi_fixed(work) << 1;
    let half = BigInt::one() << (GUARD - 1);
    let table: Vec<BigInt> = (0..n as i64)
        .map(|k| {
            let kk = if 2 * k > n as i64 { k - n as i64 } else { k };
            let theta = (&two_pi * BigInt::from(kk)) / BigInt::from(n);
            (cos_fixed(&theta, work) + &half) >> GUARD
        })
        .collect();
    let table = Arc::new(table);
    cache.lock().unwrap().insert((n, prec), table.clone());
    table
}

/// Sign of a real element: −1, 0 or +1.
pub fn sign_of_real(a: &CycNumber) -> Result<i8> {
    if a.is_zero() {
        return Ok(0);
    }
    if !a.is_real() {
        return Err(Error::NotReal);
    }
    if let Some(q) = a.to_rational() {
        return Ok(if q.is_positive() { 1 } else { -1 });
    }
    let (nums, den) = a.integer_form();
    let l1: BigInt = nums.iter().map(|c| c.abs()).sum();
    let n = a.conductor();
    let mut prec: u64 = 96;
    loop {
        let table = cos_table(n, prec);
        let mut acc = BigInt::zero();
        for (k, c) in nums.iter().enumerate() {
            if !c.is_zero() {
                acc += c * &table[k];
            }
        }
        // |acc - true·den·2^prec| <= 2·Σ|c_k|
        let err = &l1 * 2 + 1;
        if acc.abs() > err {
            let s = if acc.is_positive() { 1 } else { -1 };
            return Ok(if den.is_negative() { -s } else { s });
        }
        prec *= 2;
        if prec > 1 << 16 {
            return Err(Error::Construction(
                "sign evaluation did not converge".to_string(),
            ));
        }
    }
}

/// Rigorous floating-point enclosure of a real element, for bounds that only need
/// to be safe upper bounds (returns a value at least as large as the true one).
pub fn upper_f64(a: &CycNumber) -> Result<f64> {
    if !a.is_real() {
        return Err(Error::NotReal);
    }
    let (re, _) = a.to_complex_f64();
    let (nums, den) = a.integer_form();
    let l1: f64 = nums.iter().map(|c| super::number::rational_to_f64(&(c.abs().into()))).sum();
    let d = super::number::rational_to_f64(&den.abs().into());
    Ok(re + 1e-12 * (1.0 + l1 / d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_signs() {
        let sqrt2 = &CycNumber::root_of_unity(8, 1) + &CycNumber::root_of_unity(8, 7);
        assert_eq!(sign_of_real(&sqrt2).unwrap(), 1);
        assert_eq!(sign_of_real(&-&sqrt2).unwrap(), -1);
        assert_eq!(sign_of_real(&CycNumber::zero(8)).unwrap(), 0);
        let c = &CycNumber::root_of_unity(5, 1) + &CycNumber::root_of_unity(5, 4);
        assert_eq!(sign_of_real(&c).unwrap(), 1);
        let c2 = &CycNumber::root_of_unity(5, 2) + &CycNumber::root_of_unity(5, 3);
        assert_eq!(sign_of_real(&c2).unwrap(), -1);
    }

    #[test]
    fn non_real_rejected() {
        assert!(matches!(sign_of_real(&CycNumber::root_of_unity(4, 1)), Err(Error::NotReal)));
    }

    #[test]
    fn tiny_difference_needs_precision() {
        // 2cos(2π/7) - 1.2469796037174670... is tiny but nonzero for the truncation below
        let c = &CycNumber::root_of_unity(7, 1) + &CycNumber::root_of_unity(7, 6);
        let approx = crate::exact::Rational::new(
            BigInt::from(12469796037174670i64),
            BigInt::from(10000000000000000i64),
        );
        let d = &c - &CycNumber::from_rational(approx, 7);
        assert_eq!(sign_of_real(&d).unwrap(), 1);
    }
}
