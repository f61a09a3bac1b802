//! The U(1)_n system the level-2 orthogonal data unfold to.

use num_bigint::BigInt;

use super::ModularData;
use crate::affine::Series;
use crate::error::{Error, Result};
use crate::exact::{sqrt_rational, CycMatrix, CycNumber, Rational};

/// S̃_{ab} = ζ_n^{ab}/√n on Z/nZ, with T̃² (odd n) or T̃ (even n) as diagonal residues:
/// entry a is exp(2πi·`t_residues[a]`/`t_modulus`).
#[derive(Clone, Debug)]
pub struct UnfoldedData {
    pub n: i64,
    pub kernel: CycMatrix,
    pub scale: CycNumber,
    pub full_t: bool,
    pub t_modulus: i64,
    pub t_residues: Vec<i64>,
}

pub fn build_unfolded(n: i64, with_full_t: bool) -> Result<UnfoldedData> {
    if n < 1 {
        return Err(Error::Precondition("unfolded system needs n ≥ 1".into()));
    }
    if with_full_t && n % 2 != 0 {
        return Err(Error::Precondition("T̃ itself is only defined for even n".into()));
    }
    let fld = crate::exact::field::field(n as u32);
    let rows = (0..n)
        .map(|a| (0..n).map(|b| fld.power(a * b).to_vec()).collect())
        .collect();
    let kernel = CycMatrix::from_coeff_rows(n as u32, rows)?;
    let scale = sqrt_rational(&Rational::new(BigInt::from(1), BigInt::from(n)));
    let t_modulus = if with_full_t { 2 * n } else { n };
    let t_residues = (0..n).map(|a| (a * a).rem_euclid(t_modulus)).collect();
    Ok(UnfoldedData {
        n,
        kernel,
        scale,
        full_t: with_full_t,
        t_modulus,
        t_residues,
    })
}

impl UnfoldedData {
    pub fn s(&self, a: i64, b: i64) -> CycNumber {
        let n = self.n;
        &self.kernel.entry_cyc(a.rem_euclid(n) as usize, b.rem_euclid(n) as usize) * &self.scale
    }
}

/// Rank-level check: on the γ-block, S_{γ^aγ^b} = w(a,b)·(S̃_{ab} + S̃_{a,−b}) with the
/// folding weights 1, ½, ¼.
pub fn rank_level_check(md: &ModularData) -> Result<()> {
    let alg = &md.alg;
    if alg.level != 2 {
        return Err(Error::Precondition("rank-level check applies at level 2".into()));
    }
    let r = alg.rank as i64;
    let n = alg.n() as i64;
    let u = build_unfolded(n, alg.series == Series::D)?;
    let edge = |a: i64| a == 0 || (alg.series == Series::D && a == r);
    for a in 0..=r {
        for b in 0..=r {
            let wt = match (edge(a), edge(b)) {
                (true, true) => Rational::new(1.into(), 4.into()),
                (false, false) => Rational::new(1.into(), 1.into()),
                _ => Rational::new(1.into(), 2.into()),
            };
            let want = (&u.s(a, b) + &u.s(a, -b)).scale(&wt);
            let i = md.index_of(&crate::affine::named::gamma(alg, a as u32)?)?;
            let j = md.index_of(&crate::affine::named::gamma(alg, b as u32)?)?;
            if md.s(i, j) != want {
                return Err(Error::Construction(format!("rank-level mismatch at (γ^{a}, γ^{b}) for {alg}")));
            }
        }
    }
    // T (or T² for B) and its unfolded partner separate the block in the same way
    let modulus = Rational::from_integer(BigInt::from(u.t_modulus));
    let class = |a: i64| -> Result<Rational> {
        let i = md.index_of(&crate::affine::named::gamma(alg, a as u32)?)?;
        let v = &md.norms[i];
        Ok(v - (v / &modulus).floor() * &modulus)
    };
    for a in 0..=r {
        for b in 0..=r {
            let same_t = class(a)? == class(b)?;
            let same_u = u.t_residues[a as usize] == u.t_residues[b as usize];
            if same_t != same_u {
                return Err(Error::Construction(format!("T residues separate γ^{a}, γ^{b} differently for {alg}")));
            }
        }
    }
    Ok(())
}
