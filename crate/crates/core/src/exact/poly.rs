//! Integer polynomials needed to realise cyclotomic fields concretely.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Returns the divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn euler_phi(n: u64) -> u64 {
    let mut m = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Exact division of `num` by the monic polynomial `den` (coefficients low to high).
/// Panics if the division is not exact.
fn div_exact_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    assert!(den[dn].is_one(), "divisor must be monic");
    let mut rem = num.to_vec();
    if rem.len() <= dn {
        assert!(rem.iter().all(Zero::is_zero));
        return vec![BigInt::zero()];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "non-exact polynomial division");
    quot
}

/// The `n`-th cyclotomic polynomial, coefficients from the constant term up.
///
/// Computed by dividing `x^n - 1` by `Φ_d` for every proper divisor `d` of `n`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic_polynomial needs n >= 1");
    let mut cache: Vec<(u64, Vec<BigInt>)> = Vec::new();
    for d in divisors(n as u64) {
        let mut p = vec![BigInt::zero(); d as usize + 1];
        p[0] = BigInt::from(-1);
        p[d as usize] = BigInt::one();
        for (e, phi_e) in &cache {
            if d % e == 0 {
                p = div_exact_monic(&p, phi_e);
            }
        }
        cache.push((d, p));
    }
    cache.pop().expect("n has at least one divisor").1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(9), ints(&[1, 0, 0, 1, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn phi9_by_long_division() {
        // (x^9 - 1) / ((x - 1)(x^2 + x + 1)) computed independently
        let mut num = vec![BigInt::zero(); 10];
        num[0] = BigInt::from(-1);
        num[9] = BigInt::one();
        let q = div_exact_monic(&num, &ints(&[-1, 1]));
        let q = div_exact_monic(&q, &ints(&[1, 1, 1]));
        assert_eq!(q, cyclotomic_polynomial(9));
    }

    #[test]
    fn degree_is_euler_phi() {
        for n in 1..=120u32 {
            assert_eq!(cyclotomic_polynomial(n).len() as u64 - 1, euler_phi(n as u64));
        }
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(9), vec![1, 3, 9]);
        assert_eq!(divisors(1), vec![1]);
    }
}
