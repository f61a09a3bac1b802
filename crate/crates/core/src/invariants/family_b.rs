//! The B_{r,2} families.

use num_integer::Roots;

use super::{half_sum_times, product, simple_current_invariant, Indexer, InvariantMatrix};
use crate::affine::named::{fundamental, gamma, vacuum};
use crate::affine::{apply_current, AlgebraSpec, Series, SimpleCurrent};
use crate::error::{Error, Result};

fn require_b2(alg: &AlgebraSpec) -> Result<()> {
    if alg.series != Series::B || alg.level != 2 {
        return Err(Error::Precondition(format!("B-series level-2 family requested on {alg}")));
    }
    Ok(())
}

/// d | n, n | d², ℓ² ≡ 1 (mod d²/n).
pub(crate) fn check_b_params(n: i64, d: i64, ell: i64) -> Result<()> {
    if d <= 0 || n % d != 0 || (d * d) % n != 0 {
        return Err(Error::Constraint(format!("d = {d} must divide n = {n} with n | d²")));
    }
    let m = d * d / n;
    if (ell * ell - 1).rem_euclid(m) != 0 {
        return Err(Error::Constraint(format!("ℓ = {ell} must satisfy ℓ² ≡ 1 (mod {m})")));
    }
    Ok(())
}

fn congruent_pm(b: i64, a: i64, m: i64) -> bool {
    (b - a).rem_euclid(m) == 0 || (b + a).rem_euclid(m) == 0
}

/// B(d,ℓ).
pub fn family_b(d: i64, ell: i64, alg: &AlgebraSpec) -> Result<InvariantMatrix> {
    require_b2(alg)?;
    let n = alg.n() as i64;
    check_b_params(n, d, ell)?;
    let r = alg.rank as i64;
    let idx = Indexer::new(alg);
    let j = SimpleCurrent::Jb;
    let mut m = InvariantMatrix::zeros(alg, format!("B({d},{ell})"));
    for i in 0..2 {
        let at = |a: i64| -> Result<usize> {
            let g = gamma(alg, a as u32)?;
            idx.get(&if i == 0 { g } else { apply_current(j, &g, alg)? })
        };
        for a in 0..=r {
            for b in 0..=r {
                let v = if a % d == 0 && b % d == 0 && a != 0 && b != 0 {
                    2
                } else if (d * a) % n != 0 || !congruent_pm(b, a * ell, d) {
                    0
                } else {
                    1
                };
                m.entries[at(a)?][at(b)?] = v;
            }
        }
        let lr = fundamental(alg, r as u32)?;
        let s = idx.get(&if i == 0 { lr.clone() } else { apply_current(j, &lr, alg)? })?;
        m.entries[s][s] = 1;
    }
    Ok(m)
}

/// B(d₁,ℓ₁|d₂,ℓ₂) = ½(B(d₁,ℓ₁) + B(d₂,ℓ₂))·I[J_b].
pub fn family_b_pair(d1: i64, l1: i64, d2: i64, l2: i64, alg: &AlgebraSpec) -> Result<InvariantMatrix> {
    let a = family_b(d1, l1, alg)?;
    let b = family_b(d2, l2, alg)?;
    let ij = simple_current_invariant(SimpleCurrent::Jb, alg)?;
    half_sum_times(&a, &b, &ij, format!("B({d1},{l1}|{d2},{l2})"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BExceptional {
    I,
    II,
    III,
    IV,
}

impl BExceptional {
    pub fn tag(&self) -> &'static str {
        match self {
            BExceptional::I => "i",
            BExceptional::II => "ii",
            BExceptional::III => "iii",
            BExceptional::IV => "iv",
        }
    }
}

/// Bⁱ … Bⁱᵛ, defined when n is a perfect square.
pub fn family_b_exceptional(tag: BExceptional, alg: &AlgebraSpec) -> Result<InvariantMatrix> {
    require_b2(alg)?;
    let n = alg.n() as i64;
    let root = n.sqrt();
    if root * root != n {
        return Err(Error::Constraint(format!("n = {n} is not a perfect square")));
    }
    let r = alg.rank as i64;
    match tag {
        BExceptional::III | BExceptional::IV => {
            let bi = family_b_exceptional(BExceptional::I, alg)?;
            let ij = simple_current_invariant(SimpleCurrent::Jb, alg)?;
            let m = if tag == BExceptional::III { product(&bi, &ij)? } else { product(&ij, &bi)? };
            return Ok(m.with_name(format!("B^{}", tag.tag())));
        }
        _ => {}
    }
    let idx = Indexer::new(alg);
    let j = SimpleCurrent::Jb;
    let lr = fundamental(alg, r as u32)?;
    let jlr = apply_current(j, &lr, alg)?;
    let (lam_r, mu_r) = if r % 8 == 0 { (idx.get(&lr)?, idx.get(&jlr)?) } else { (idx.get(&jlr)?, idx.get(&lr)?) };
    let zero = idx.get(&vacuum(alg))?;
    let j0 = idx.get(&apply_current(j, &vacuum(alg), alg)?)?;
    let class: Vec<usize> = (1..=r)
        .filter(|a| a % root == 0)
        .map(|a| gamma(alg, a as u32).and_then(|g| idx.get(&g)))
        .collect::<Result<_>>()?;
    let mut m = InvariantMatrix::zeros(alg, format!("B^{}", tag.tag()));
    let mut set = |x: usize, y: usize| m.entries[x][y] = 1;
    set(zero, zero);
    for &g in &class {
        set(zero, g);
        set(g, zero);
        for &h in &class {
            set(g, h);
        }
        set(lam_r, g);
        set(g, lam_r);
    }
    if tag == BExceptional::I {
        set(mu_r, mu_r);
        set(lam_r, j0);
        set(j0, lam_r);
    } else {
        set(zero, lam_r);
        set(lam_r, zero);
        set(lam_r, lam_r);
    }
    Ok(m)
}
