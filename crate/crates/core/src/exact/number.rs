use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::field;
use super::Rational;
use crate::error::{Error, Result};

/// An element of Q(ζ_N), stored in the power basis `1, ζ, …, ζ^{φ(N)-1}` of `Q[x]/Φ_N`.
///
/// Equality is conductor-independent: both sides are embedded in the field of the
/// least common multiple before comparing coefficient vectors.
#[derive(Clone)]
pub struct CycNumber {
    conductor: u32,
    coeffs: Vec<Rational>,
}

fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

impl CycNumber {
    pub fn zero(conductor: u32) -> Self {
        let deg = field(conductor).degree;
        CycNumber {
            conductor,
            coeffs: vec![Rational::zero(); deg],
        }
    }

    pub fn one(conductor: u32) -> Self {
        Self::from_rational(Rational::one(), conductor)
    }

    pub fn from_rational(q: Rational, conductor: u32) -> Self {
        let mut z = Self::zero(conductor);
        z.coeffs[0] = q;
        z
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(v)), 1)
    }

    /// `ζ_N^power`.
    pub fn root_of_unity(conductor: u32, power: i64) -> Self {
        Self::from_exponents(conductor, &[(power, Rational::one())])
    }

    /// `Σ c·ζ_N^e` over the given (exponent, coefficient) pairs.
    pub fn from_exponents(conductor: u32, terms: &[(i64, Rational)]) -> Self {
        let f = field(conductor);
        let mut coeffs = vec![Rational::zero(); f.degree];
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            for (slot, &r) in coeffs.iter_mut().zip(f.power(*e)) {
                if r != 0 {
                    *slot += c * Rational::from_integer(BigInt::from(r));
                }
            }
        }
        CycNumber { conductor, coeffs }
    }

    /// Builds from integer exponent-indexed coefficients (a group-ring element of Z[C_N]).
    pub fn from_group_ring(conductor: u32, values: &[i64]) -> Self {
        let f = field(conductor);
        let mut acc = vec![0i128; f.degree];
        for (e, &v) in values.iter().enumerate() {
            if v == 0 {
                continue;
            }
            for (slot, &r) in acc.iter_mut().zip(f.power(e as i64)) {
                *slot += v as i128 * r as i128;
            }
        }
        CycNumber {
            conductor,
            coeffs: acc
                .into_iter()
                .map(|v| Rational::from_integer(BigInt::from(v)))
                .collect(),
        }
    }

    pub fn from_coeffs(conductor: u32, coeffs: Vec<Rational>) -> Self {
        assert_eq!(coeffs.len(), field(conductor).degree, "coefficient vector length must be φ(N)");
        CycNumber { conductor, coeffs }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value if this element lies in Q.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-expresses this element in Q(ζ_M); `M` must be a multiple of the conductor.
    pub fn embed(&self, m: u32) -> Self {
        if m == self.conductor {
            return self.clone();
        }
        assert!(m % self.conductor == 0, "cannot embed Q(zeta_{}) into Q(zeta_{m})", self.conductor);
        let step = (m / self.conductor) as i64;
        let terms: Vec<(i64, Rational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as i64 * step, c.clone()))
            .collect();
        Self::from_exponents(m, &terms)
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        if self.conductor == other.conductor {
            return (self.clone(), other.clone());
        }
        let m = lcm(self.conductor, other.conductor);
        (self.embed(m), other.embed(m))
    }

    /// Complex conjugation `ζ ↦ ζ^{N-1}`.
    pub fn conj(&self) -> Self {
        self.galois_unchecked(self.conductor as i64 - 1)
    }

    pub(crate) fn galois_unchecked(&self, ell: i64) -> Self {
        let terms: Vec<(i64, Rational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as i64 * ell, c.clone()))
            .collect();
        Self::from_exponents(self.conductor, &terms)
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    pub fn scale(&self, q: &Rational) -> Self {
        CycNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Multiplicative inverse by the extended Euclidean algorithm modulo Φ_N.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero(self.conductor));
        }
        let phi: Vec<Rational> = super::poly::cyclotomic_polynomial(self.conductor)
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        let a = trim(self.coeffs.clone());
        let (g, _, t) = ext_gcd(phi, a);
        // g is a nonzero constant since Φ_N is irreducible
        debug_assert_eq!(g.len(), 1);
        let g0 = g[0].clone();
        let deg = self.coeffs.len();
        let mut coeffs: Vec<Rational> = t.into_iter().map(|c| c / &g0).collect();
        coeffs.resize(deg, Rational::zero());
        Ok(CycNumber {
            conductor: self.conductor,
            coeffs,
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.common(other);
        Ok(&a * &b.inv()?)
    }

    /// Floating-point value at ζ_N = exp(2πi/N).
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = rational_to_f64(c);
            let th = 2.0 * std::f64::consts::PI * k as f64 / n;
            re += v * th.cos();
            im += v * th.sin();
        }
        (re, im)
    }

    /// Numerators over a common denominator: `self = nums / den`.
    pub fn integer_form(&self) -> (Vec<BigInt>, BigInt) {
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (nums, den)
    }
}

pub(crate) fn rational_to_f64(q: &Rational) -> f64 {
    match (q.numer().to_f64(), q.denom().to_f64()) {
        (Some(a), Some(b)) if a.is_finite() && b.is_finite() => a / b,
        _ => {
            // scale down huge numerators and denominators together
            let shift = q.numer().bits().max(q.denom().bits()).saturating_sub(1000);
            let a = (q.numer() >> shift).to_f64().unwrap_or(0.0);
            let b = (q.denom() >> shift).to_f64().unwrap_or(1.0);
            a / b
        }
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_sub_mul(a: &[Rational], q: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let len = a.len().max(q.len() + b.len() - 1);
    let mut out = vec![Rational::zero(); len];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, qi) in q.iter().enumerate() {
        if qi.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] -= qi * bj;
        }
    }
    trim(out)
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return (vec![Rational::zero()], trim(rem));
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + db] / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            let t = &c * bj;
            rem[i + j] -= t;
        }
        quot[i] = c;
    }
    rem.truncate(db.max(1));
    (trim(quot), trim(rem))
}

/// Returns (g, s, t) with s·a + t·b = g, where b is the second argument.
fn ext_gcd(a: Vec<Rational>, b: Vec<Rational>) -> (Vec<Rational>, Vec<Rational>, Vec<Rational>) {
    let mut r0 = a;
    let mut r1 = b;
    let mut s0 = vec![Rational::one()];
    let mut s1 = vec![Rational::zero()];
    let mut t0 = vec![Rational::zero()];
    let mut t1 = vec![Rational::one()];
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = poly_sub_mul(&s0, &q, &s1);
        let t2 = poly_sub_mul(&t0, &q, &t1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    (r0, s0, t0)
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycNumber {}

impl<'a> Add<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: &'a CycNumber) -> CycNumber {
        let (mut a, b) = self.common(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs) {
            *x += y;
        }
        a
    }
}

impl<'a> Sub<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: &'a CycNumber) -> CycNumber {
        let (mut a, b) = self.common(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs) {
            *x -= y;
        }
        a
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: &'a CycNumber) -> CycNumber {
        let (a, b) = self.common(rhs);
        let f = field(a.conductor);
        let deg = f.degree;
        let mut prod = vec![Rational::zero(); 2 * deg - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let mut coeffs: Vec<Rational> = prod[..deg].to_vec();
        for (e, c) in prod.iter().enumerate().skip(deg) {
            if c.is_zero() {
                continue;
            }
            for (slot, &r) in coeffs.iter_mut().zip(f.power(e as i64)) {
                if r != 0 {
                    *slot += c * Rational::from_integer(BigInt::from(r));
                }
            }
        }
        CycNumber {
            conductor: a.conductor,
            coeffs,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycNumber> for CycNumber {
            type Output = CycNumber;
            fn $m(self, rhs: CycNumber) -> CycNumber {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        -&self
    }
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CycNumber {
    /// Renders as `Σ c_k ζ_N^k`, e.g. `1 + -1/2·ζ_8^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                _ if c.is_one() => format!("ζ_{}^{k}", self.conductor),
                _ if c.is_negative() && (-c).is_one() => format!("-ζ_{}^{k}", self.conductor),
                _ => format!("{c}·ζ_{}^{k}", self.conductor),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(BigInt::from(a), BigInt::from(b))
    }

    fn sqrt2() -> CycNumber {
        &CycNumber::root_of_unity(8, 1) + &CycNumber::root_of_unity(8, 7)
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(CycNumber::root_of_unity(4, 2), CycNumber::from_int(-1));
        assert_eq!(CycNumber::root_of_unity(1, 0), CycNumber::from_int(1));
        assert_eq!(CycNumber::root_of_unity(6, 3), CycNumber::from_int(-1));
    }

    #[test]
    fn sqrt2_squares_to_two() {
        // (ζ8 + ζ8^-1)^2 = ζ8^2 + 2 + ζ8^-2 = i + 2 - i = 2
        let s = sqrt2();
        assert_eq!(&s * &s, CycNumber::from_int(2));
    }

    #[test]
    fn vanishing_geometric_sum() {
        let z = |p| CycNumber::root_of_unity(3, p);
        let s = &(&z(0) + &z(1)) + &z(2);
        assert!(s.is_zero());
    }

    #[test]
    fn conjugation_of_zeta5() {
        assert_eq!(CycNumber::root_of_unity(5, 1).conj(), CycNumber::root_of_unity(5, 4));
    }

    #[test]
    fn inverse_and_division() {
        let a = &CycNumber::root_of_unity(12, 1) + &CycNumber::from_rational(q(3, 2), 12);
        let inv = a.inv().unwrap();
        assert_eq!(&a * &inv, CycNumber::one(12));
        assert!(matches!(CycNumber::zero(5).inv(), Err(Error::DivisionByZero(5))));
        let s = sqrt2();
        assert_eq!(CycNumber::from_int(2).div(&s).unwrap(), s);
    }

    #[test]
    fn conductor_independent_equality() {
        // ζ_4 = ζ_8^2 = ζ_12^3
        assert_eq!(CycNumber::root_of_unity(4, 1), CycNumber::root_of_unity(8, 2));
        assert_eq!(CycNumber::root_of_unity(4, 1), CycNumber::root_of_unity(12, 3));
        assert_ne!(CycNumber::root_of_unity(4, 1), CycNumber::root_of_unity(12, 1));
        let mixed = &CycNumber::root_of_unity(3, 1) + &CycNumber::root_of_unity(4, 1);
        assert_eq!(mixed.conductor(), 12);
    }

    #[test]
    fn debug_rendering() {
        let s = sqrt2();
        let txt = format!("{s}");
        assert!(txt.contains("ζ_8^1"), "{txt}");
        assert_eq!(format!("{}", CycNumber::zero(7)), "0");
    }

    #[test]
    fn float_value_matches() {
        let (re, im) = sqrt2().to_complex_f64();
        assert!((re - 2f64.sqrt()).abs() < 1e-12 && im.abs() < 1e-12);
    }
}
