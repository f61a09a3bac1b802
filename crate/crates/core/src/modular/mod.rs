//! Exact modular data: S as an integral cyclotomic kernel times a real scale, T through
//! norm residues, q-dimensions and Galois permutations.

mod closed;
mod export;
mod galois;
mod general;
mod unfolded;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::affine::{
    apply_conjugation, apply_current, charge, conjugations, currents, enumerate_weights, norm_shift, AlgebraSpec,
    Weight,
};
use crate::error::{Error, Result};
use crate::exact::{sign_of_real, CycMatrix, CycNumber, Rational};

pub use closed::{closed_form, describe as describe_closed_entry};
pub use export::{smatrix_json, smatrix_table};
pub use galois::{galois_data, qdim_parity, GaloisData};
pub use general::{general_raw, DEFAULT_MAX_RANK};
pub use unfolded::{build_unfolded, rank_level_check, UnfoldedData};

/// Modular data of one algebra. S = `scale` · `kernel`, `kernel` integral over Z[ζ_N] and
/// `scale` real with rational square; `kernel`·`kernel`† = `norm`·I.
#[derive(Clone, Debug)]
pub struct ModularData {
    pub alg: AlgebraSpec,
    pub weights: Vec<Weight>,
    index: HashMap<Weight, usize>,
    pub kernel: CycMatrix,
    pub scale: CycNumber,
    pub norm: i64,
    /// (λ+ρ)² − ρ², exactly.
    pub norms: Vec<Rational>,
    /// (λ+ρ)² − ρ² mod 2n, which fixes T up to a global phase.
    pub normsq2n: Vec<Rational>,
    /// S_{0λ}/S_{00}.
    pub qdim: Vec<CycNumber>,
}

fn integral_norm(scale: &CycNumber) -> Result<i64> {
    let sq = (scale * scale)
        .to_rational()
        .ok_or_else(|| Error::Construction("scale² is not rational".into()))?;
    let k = Rational::from_integer(BigInt::from(1)) / sq;
    if !k.is_integer() {
        return Err(Error::Construction(format!("1/scale² = {k} is not an integer")));
    }
    k.to_integer().to_i64().ok_or(Error::Overflow)
}

/// S from the Weyl-sum construction, with a configurable rank cap.
pub fn general_smatrix_bounded(alg: &AlgebraSpec, max_rank: u32) -> Result<(CycMatrix, CycNumber)> {
    let (raw, scale) = general_raw(alg, max_rank)?;
    if !raw.kernel.mul(&raw.kernel.conj_transpose()?)?.is_scalar(raw.norm) {
        return Err(Error::Construction(format!("Ŝ·Ŝ† is not scalar for {alg}")));
    }
    Ok((raw.kernel, scale))
}

/// S from the Weyl-sum construction (rank ≤ 10), as explicit entries.
pub fn general_smatrix(alg: &AlgebraSpec) -> Result<Vec<Vec<CycNumber>>> {
    let (k, c) = general_smatrix_bounded(alg, DEFAULT_MAX_RANK)?;
    Ok(expand(&k, &c))
}

fn expand(kernel: &CycMatrix, scale: &CycNumber) -> Vec<Vec<CycNumber>> {
    let d = kernel.dim();
    (0..d)
        .map(|i| (0..d).map(|j| &kernel.entry_cyc(i, j) * scale).collect())
        .collect()
}

fn assemble(alg: AlgebraSpec, weights: Vec<Weight>, kernel: CycMatrix, scale: CycNumber) -> Result<ModularData> {
    let norm = integral_norm(&scale)?;
    let index = weights.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let two_n = Rational::from_integer(BigInt::from(2 * alg.n()));
    let mut norms = Vec::with_capacity(weights.len());
    let mut normsq2n = Vec::with_capacity(weights.len());
    for w in &weights {
        let v = norm_shift(w, &alg)?;
        let m = &v - (&v / &two_n).floor() * &two_n;
        norms.push(v);
        normsq2n.push(m);
    }
    let s00 = kernel.entry_cyc(0, 0);
    let qdim = (0..weights.len())
        .map(|j| kernel.entry_cyc(0, j).div(&s00))
        .collect::<Result<Vec<_>>>()?;
    Ok(ModularData {
        alg,
        weights,
        index,
        kernel,
        scale,
        norm,
        norms,
        normsq2n,
        qdim,
    })
}

/// Exact modular data: closed forms at level 2, the Weyl-sum construction otherwise.
pub fn build_modular_data(alg: &AlgebraSpec) -> Result<ModularData> {
    build_with_rank_cap(alg, DEFAULT_MAX_RANK)
}

pub fn build_with_rank_cap(alg: &AlgebraSpec, max_rank: u32) -> Result<ModularData> {
    let weights = enumerate_weights(alg);
    let (kernel, scale) = match alg.level {
        2 => closed_form(alg, &weights)?,
        1 | 3 => general_smatrix_bounded(alg, max_rank)?,
        _ => return Err(Error::Unsupported(format!("no S construction for {alg}"))),
    };
    assemble(*alg, weights, kernel, scale)
}

/// Modular data from the Weyl-sum construction regardless of level.
pub fn build_general(alg: &AlgebraSpec, max_rank: u32) -> Result<ModularData> {
    let (kernel, scale) = general_smatrix_bounded(alg, max_rank)?;
    assemble(*alg, enumerate_weights(alg), kernel, scale)
}

impl ModularData {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn index_of(&self, w: &Weight) -> Result<usize> {
        self.index.get(w).copied().ok_or_else(|| Error::UnknownWeight(w.0.clone()))
    }

    /// Conductor of the field holding every S entry (kernel and scale together).
    pub fn conductor(&self) -> u32 {
        self.kernel.conductor().lcm(&self.scale.conductor())
    }

    /// S_{λμ}, exactly.
    pub fn s(&self, i: usize, j: usize) -> CycNumber {
        &self.kernel.entry_cyc(i, j) * &self.scale
    }

    pub fn s_matrix(&self) -> Vec<Vec<CycNumber>> {
        expand(&self.kernel, &self.scale)
    }

    /// True when the T eigenvalues of λ and μ agree.
    pub fn same_t(&self, i: usize, j: usize) -> bool {
        self.normsq2n[i] == self.normsq2n[j]
    }

    /// The permutation S² induces (charge conjugation), checked to be one.
    pub fn s_squared_permutation(&self) -> Result<Vec<usize>> {
        let sq = self.kernel.mul(&self.kernel)?;
        sq.as_scaled_permutation(self.norm)
            .ok_or_else(|| Error::Construction(format!("S² is not a permutation for {}", self.alg)))
    }

    /// Every structural property of S, exactly: symmetry, unitarity, S² a conjugation,
    /// positive vacuum row, and the simple-current relation for every current.
    pub fn verify(&self) -> Result<()> {
        let alg = &self.alg;
        if self.kernel.transpose() != self.kernel {
            return Err(Error::Construction(format!("S is not symmetric for {alg}")));
        }
        if !self.kernel.mul(&self.kernel.conj_transpose()?)?.is_scalar(self.norm) {
            return Err(Error::Construction(format!("S is not unitary for {alg}")));
        }
        let perm = self.s_squared_permutation()?;
        let is_conj = conjugations(alg).into_iter().any(|c| {
            self.weights
                .iter()
                .enumerate()
                .all(|(i, w)| apply_conjugation(c, w, alg).map(|x| x == self.weights[perm[i]]).unwrap_or(false))
        });
        if !is_conj {
            return Err(Error::Construction(format!("S² is not a conjugation for {alg}")));
        }
        if sign_of_real(&self.scale)? <= 0 {
            return Err(Error::Construction("scale is not positive".into()));
        }
        for j in 0..self.dim() {
            if sign_of_real(&self.kernel.entry_cyc(0, j))? <= 0 {
                return Err(Error::Construction(format!("vacuum row not positive at {}", self.weights[j])));
            }
        }
        self.verify_currents()
    }

    /// S_{Jμ,ν} = e^{2πi Q_J(ν)} S_{μν} for every current, on the kernel.
    pub fn verify_currents(&self) -> Result<()> {
        let alg = &self.alg;
        for j in currents(alg) {
            let moved: Vec<usize> = self
                .weights
                .iter()
                .map(|w| apply_current(j, w, alg).and_then(|x| self.index_of(&x)))
                .collect::<Result<_>>()?;
            for nu in 0..self.dim() {
                let q = charge(j, &self.weights[nu], alg)?;
                let num = q.numer().to_i64().ok_or(Error::Overflow)?;
                let den = q.denom().to_u32().ok_or(Error::Overflow)?;
                let ph = CycNumber::root_of_unity(den, num);
                for mu in 0..self.dim() {
                    let lhs = self.kernel.entry_cyc(moved[mu], nu);
                    let rhs = &self.kernel.entry_cyc(mu, nu) * &ph;
                    if lhs != rhs {
                        return Err(Error::Construction(format!(
                            "current {j} relation fails at ({}, {}) for {alg}",
                            self.weights[mu], self.weights[nu]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// True if the two descriptions of S agree entrywise.
    pub fn same_s(&self, other: &ModularData) -> bool {
        if self.weights != other.weights {
            return false;
        }
        // scale_a·X = scale_b·Y  ⇔  X = (scale_b/scale_a)·Y, and the ratio is rational
        // when both scales are square roots of rationals of the same square class
        let ratio = match other.scale.div(&self.scale) {
            Ok(r) => r,
            Err(_) => return false,
        };
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| self.kernel.entry_cyc(i, j) == &other.kernel.entry_cyc(i, j) * &ratio))
    }

    /// Quantum dimensions as floats, for ordering checks and display.
    pub fn qdim_f64(&self) -> Vec<f64> {
        self.qdim.iter().map(|q| q.to_complex_f64().0).collect()
    }

    pub fn vacuum_s_f64(&self, j: usize) -> f64 {
        let v = self.s(0, j);
        debug_assert!(!v.is_zero());
        v.to_complex_f64().0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_two_closed_forms_match_the_weyl_sum() {
        for alg in [AlgebraSpec::b(3, 2), AlgebraSpec::b(4, 2), AlgebraSpec::d(4, 2), AlgebraSpec::d(5, 2)] {
            let closed = build_modular_data(&alg).unwrap();
            closed.verify().unwrap();
            let general = build_general(&alg, DEFAULT_MAX_RANK).unwrap();
            general.verify().unwrap();
            assert!(closed.same_s(&general), "{alg}");
        }
    }

    #[test]
    fn reference_entries() {
        let alg = AlgebraSpec::d(5, 2);
        let md = build_modular_data(&alg).unwrap();
        let r = alg.rank as usize;
        // Λ_r sits after λ^0..λ^r, Jvλ^0, Jvλ^r
        let lr = r + 3;
        let want = (&CycNumber::one(1) + &CycNumber::root_of_unity(4, -(r as i64)))
            .scale(&Rational::new(1.into(), 4.into()));
        assert_eq!(md.s(lr, lr), want);
    }
}
