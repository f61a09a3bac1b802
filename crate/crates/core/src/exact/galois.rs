use num_integer::Integer;

use super::number::CycNumber;
use crate::error::{Error, Result};

/// σ_ℓ ∈ Gal(Q(ζ_N)/Q), acting by ζ_N ↦ ζ_N^ℓ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GaloisAutomorphism {
    conductor: u32,
    exponent: u32,
}

impl GaloisAutomorphism {
    pub fn new(conductor: u32, exponent: i64) -> Result<Self> {
        let n = conductor as i64;
        let e = exponent.rem_euclid(n);
        if e.gcd(&n) != 1 {
            return Err(Error::NotAUnit {
                exponent,
                conductor,
            });
        }
        Ok(GaloisAutomorphism {
            conductor,
            exponent: e as u32,
        })
    }

    pub fn identity(conductor: u32) -> Self {
        GaloisAutomorphism {
            conductor,
            exponent: 1 % conductor.max(1),
        }
    }

    pub fn complex_conjugation(conductor: u32) -> Self {
        GaloisAutomorphism {
            conductor,
            exponent: (conductor - 1).max(1) % conductor.max(1),
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// `self ∘ other`; exponents multiply modulo N.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.conductor != other.conductor {
            return Err(Error::IncompatibleConductor {
                element: other.conductor,
                automorphism: self.conductor,
            });
        }
        let e = (self.exponent as u64 * other.exponent as u64) % self.conductor as u64;
        Ok(GaloisAutomorphism {
            conductor: self.conductor,
            exponent: e as u32,
        })
    }

    /// All σ_ℓ with 0 < ℓ < N and gcd(ℓ, N) = 1.
    pub fn all(conductor: u32) -> Vec<Self> {
        (1..=conductor)
            .filter(|l| (*l as u64).gcd(&(conductor as u64)) == 1)
            .map(|l| GaloisAutomorphism {
                conductor,
                exponent: l % conductor,
            })
            .collect()
    }
}

/// Applies σ to `a`, first embedding `a` into Q(ζ_N) for σ's conductor N.
pub fn apply_galois(sigma: &GaloisAutomorphism, a: &CycNumber) -> Result<CycNumber> {
    if sigma.conductor % a.conductor() != 0 {
        return Err(Error::IncompatibleConductor {
            element: a.conductor(),
            automorphism: sigma.conductor,
        });
    }
    Ok(a.embed(sigma.conductor).galois_unchecked(sigma.exponent as i64))
}

/// Smallest ℓ' ≡ ℓ (mod m) that is a unit modulo N, where m | N.
pub fn lift_exponent(ell: i64, m: u32, conductor: u32) -> Result<i64> {
    let m = m as i64;
    let n = conductor as i64;
    if n % m != 0 {
        return Err(Error::IncompatibleConductor {
            element: m as u32,
            automorphism: conductor,
        });
    }
    let base = ell.rem_euclid(m);
    (0..n / m)
        .map(|t| base + t * m)
        .find(|c| c.gcd(&n) == 1)
        .ok_or(Error::NotAUnit {
            exponent: ell,
            conductor: m as u32,
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;

    fn sqrt2() -> CycNumber {
        &CycNumber::root_of_unity(8, 1) + &CycNumber::root_of_unity(8, 7)
    }

    #[test]
    fn sqrt2_galois_signs() {
        for ell in [1, 3, 5, 7] {
            let s = GaloisAutomorphism::new(8, ell).unwrap();
            let img = apply_galois(&s, &sqrt2()).unwrap();
            let expect = if ell == 1 || ell == 7 { sqrt2() } else { -sqrt2() };
            assert_eq!(img, expect, "ell = {ell}");
        }
    }

    #[test]
    fn identity_and_rationals_fixed() {
        let a = &CycNumber::root_of_unity(20, 3) + &CycNumber::from_int(7);
        assert_eq!(apply_galois(&GaloisAutomorphism::identity(20), &a).unwrap(), a);
        let r = CycNumber::from_rational(Rational::new(3.into(), 7.into()), 20);
        for s in GaloisAutomorphism::all(20) {
            assert_eq!(apply_galois(&s, &r).unwrap(), r);
        }
    }

    #[test]
    fn incompatible_conductor_rejected() {
        let s = GaloisAutomorphism::new(8, 3).unwrap();
        let a = CycNumber::root_of_unity(3, 1);
        assert!(apply_galois(&s, &a).is_err());
        assert!(GaloisAutomorphism::new(8, 2).is_err());
    }

    #[test]
    fn lifting() {
        assert_eq!(lift_exponent(5, 8, 24).unwrap() % 8, 5);
        let l = lift_exponent(3, 4, 60).unwrap();
        assert_eq!(l % 4, 3);
        assert_eq!(l.gcd(&60), 1);
    }
}
