//! Square roots of positive rationals inside cyclotomic fields, via quadratic Gauss sums.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::number::CycNumber;
use super::sign::sign_of_real;
use super::Rational;

fn legendre(a: u64, p: u64) -> i64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    if result == 1 {
        1
    } else if result == 0 {
        0
    } else {
        -1
    }
}

/// Splits `k` as `m^2 · s` with `s` squarefree.
pub fn square_decomposition(k: u64) -> (u64, u64) {
    let mut m = 1u64;
    let mut s = 1u64;
    let mut rest = k;
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        m *= p.pow(e / 2);
        if e % 2 == 1 {
            s *= p;
        }
        p += 1;
    }
    s *= rest;
    (m, s)
}

/// Conductor of the field the square root of squarefree `s` is built in.
pub fn sqrt_conductor(s: u64) -> u32 {
    if s == 1 {
        return 1;
    }
    let mut c = 1u64;
    let odd = if s % 2 == 0 { s / 2 } else { s };
    if s % 2 == 0 {
        c = 8;
    }
    if odd > 1 {
        c = c.lcm(&(4 * odd));
    }
    c as u32
}

/// √p for a prime p, positive.
fn sqrt_prime(p: u64) -> CycNumber {
    if p == 2 {
        return &CycNumber::root_of_unity(8, 1) + &CycNumber::root_of_unity(8, 7);
    }
    let cond = (4 * p) as u32;
    // g = Σ (a/p) ζ_p^a, g² = (−1)^{(p−1)/2} p
    let terms: Vec<(i64, Rational)> = (1..p)
        .map(|a| {
            (
                (4 * a) as i64,
                Rational::from_integer(BigInt::from(legendre(a, p))),
            )
        })
        .collect();
    let g = CycNumber::from_exponents(cond, &terms);
    let root = if p % 4 == 1 {
        g
    } else {
        // g = i√p
        &CycNumber::root_of_unity(cond, 3 * p as i64) * &g
    };
    if sign_of_real(&root).expect("√p is real") < 0 {
        -root
    } else {
        root
    }
}

/// The positive square root of the positive integer `k`.
pub fn sqrt_integer(k: u64) -> CycNumber {
    assert!(k > 0, "sqrt_integer needs a positive argument");
    let (m, s) = square_decomposition(k);
    let mut acc = CycNumber::from_int(m as i64);
    let mut rest = s;
    let mut p = 2u64;
    while rest > 1 {
        if rest % p == 0 {
            acc = &acc * &sqrt_prime(p);
            rest /= p;
        }
        p += 1;
    }
    acc
}

/// The positive square root of a positive rational `a/b`, as √(ab)/b.
pub fn sqrt_rational(q: &Rational) -> CycNumber {
    let a = q.numer().to_u64().expect("positive numerator fits u64");
    let b = q.denom().to_u64().expect("denominator fits u64");
    let r = sqrt_integer(a * b);
    r.scale(&Rational::new(BigInt::one(), BigInt::from(b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares_and_signs() {
        for k in [1u64, 2, 3, 5, 6, 7, 8, 12, 15, 17, 30, 45, 98] {
            let r = sqrt_integer(k);
            assert_eq!(&r * &r, CycNumber::from_int(k as i64), "k = {k}");
            assert!(sign_of_real(&r).unwrap() > 0);
            assert_eq!(r.conductor() % sqrt_conductor(square_decomposition(k).1), 0);
        }
    }

    #[test]
    fn decomposition() {
        assert_eq!(square_decomposition(72), (6, 2));
        assert_eq!(square_decomposition(1), (1, 1));
        assert_eq!(square_decomposition(15), (1, 15));
    }
}
