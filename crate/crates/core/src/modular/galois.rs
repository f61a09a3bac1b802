//! Galois action on S: σ(S_{λμ}) = ε_σ(λ) S_{λ^σ, μ}.

use std::collections::HashMap;

use num_integer::Integer;
use num_traits::{One, Signed};
use serde::Serialize;

use super::ModularData;
use crate::error::{Error, Result};
use crate::exact::{apply_galois, sign_of_real, GaloisAutomorphism};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisData {
    pub ell: i64,
    /// λ ↦ λ^σ, by index.
    pub perm: Vec<usize>,
    pub parity: Vec<i8>,
}

fn automorphism(md: &ModularData, ell: i64) -> Result<GaloisAutomorphism> {
    let n = md.conductor();
    if ell.gcd(&(n as i64)) != 1 {
        return Err(Error::NotAUnit {
            exponent: ell,
            conductor: n,
        });
    }
    GaloisAutomorphism::new(n, ell)
}

/// The permutation and signs of σ_ℓ, found by matching each conjugated row against ± a row.
pub fn galois_data(md: &ModularData, ell: i64) -> Result<GaloisData> {
    let sigma = automorphism(md, ell)?;
    let scale_ratio = apply_galois(&sigma, &md.scale)?
        .div(&md.scale)?
        .to_rational()
        .filter(|q| q.abs().is_one())
        .ok_or_else(|| Error::Construction("σ does not fix the scale up to sign".into()))?;
    let scale_sign: i8 = if scale_ratio.is_positive() { 1 } else { -1 };

    let kc = md.kernel.conductor() as i64;
    let moved = md.kernel.galois(ell.rem_euclid(kc))?;
    let rows: HashMap<&[i64], usize> = (0..md.dim()).map(|i| (md.kernel.row(i), i)).collect();
    let mut perm = Vec::with_capacity(md.dim());
    let mut parity = Vec::with_capacity(md.dim());
    for i in 0..md.dim() {
        let row = moved.row(i);
        let neg: Vec<i64> = row.iter().map(|c| -c).collect();
        let (target, sign) = if let Some(&j) = rows.get(row) {
            (j, 1i8)
        } else if let Some(&j) = rows.get(neg.as_slice()) {
            (j, -1i8)
        } else {
            return Err(Error::GaloisMismatch { ell, row: i });
        };
        perm.push(target);
        parity.push(sign * scale_sign);
    }
    Ok(GaloisData { ell, perm, parity })
}

/// sgn σ(D(λ)), which equals ε_σ(λ)ε_σ(0).
pub fn qdim_parity(md: &ModularData, ell: i64, index: usize) -> Result<i8> {
    let sigma = automorphism(md, ell)?;
    let v = apply_galois(&sigma, &md.qdim[index])?;
    if v.is_zero() {
        return Err(Error::Construction("Galois image of a q-dimension vanished".into()));
    }
    sign_of_real(&v)
}
