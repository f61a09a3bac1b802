//! The D_{r,2} families.

use num_integer::Roots;

use super::{half_sum_times, product, simple_current_invariant, Indexer, InvariantMatrix};
use crate::affine::named::{fundamental, gamma, vacuum};
use crate::affine::{apply_current, is_spinor, AlgebraSpec, Series, SimpleCurrent};
use crate::error::{Error, Result};

fn require_d2(alg: &AlgebraSpec) -> Result<()> {
    if alg.series != Series::D || alg.level != 2 {
        return Err(Error::Precondition(format!("D-series level-2 family requested on {alg}")));
    }
    Ok(())
}

/// d | r, r | d², ℓ² ≡ 1 (mod 4d²/r).
pub(crate) fn check_d_params(r: i64, d: i64, ell: i64) -> Result<()> {
    if d <= 0 || r % d != 0 || (d * d) % r != 0 {
        return Err(Error::Constraint(format!("d = {d} must divide r = {r} with r | d²")));
    }
    let m = 4 * d * d / r;
    if (ell * ell - 1).rem_euclid(m) != 0 {
        return Err(Error::Constraint(format!("ℓ = {ell} must satisfy ℓ² ≡ 1 (mod {m})")));
    }
    Ok(())
}

fn congruent_pm(b: i64, a: i64, m: i64) -> bool {
    (b - a).rem_euclid(m) == 0 || (b + a).rem_euclid(m) == 0
}

/// D(d,ℓ). Spinor entries are set on the diagonal only.
pub fn family_d(d: i64, ell: i64, alg: &AlgebraSpec) -> Result<InvariantMatrix> {
    require_d2(alg)?;
    let r = alg.rank as i64;
    check_d_params(r, d, ell)?;
    let idx = Indexer::new(alg);
    let j = SimpleCurrent::Jv;
    let mut m = InvariantMatrix::zeros(alg, format!("D({d},{ell})"));
    for i in 0..2 {
        let at = |a: i64| -> Result<usize> {
            let g = gamma(alg, a as u32)?;
            idx.get(&if i == 0 { g } else { apply_current(j, &g, alg)? })
        };
        for a in 0..=r {
            for b in 0..=r {
                let interior = (1..r).contains(&a) && (1..r).contains(&b);
                let v = if a % d == 0 && b % d == 0 && (a + b) % (2 * d) == 0 && interior {
                    2
                } else if (d * a) % r != 0 || !congruent_pm(b, a * ell, 2 * d) {
                    0
                } else {
                    1
                };
                m.entries[at(a)?][at(b)?] = v;
            }
        }
    }
    let lr = fundamental(alg, r as u32)?;
    // Λ_r and Λ_1 + Λ_{r−1} = J_vΛ_r
    let favoured = [idx.get(&lr)?, idx.get(&apply_current(j, &lr, alg)?)?];
    let split = r % (2 * d) == 0;
    for (s, w) in idx.weights.iter().enumerate() {
        if !is_spinor(w, alg) {
            continue;
        }
        m.entries[s][s] = if !split {
            1
        } else if favoured.contains(&s) {
            2
        } else {
            0
        };
    }
    Ok(m)
}

/// D(d₁,ℓ₁|d₂,ℓ₂) = ½(D(d₁,ℓ₁) + D(d₂,ℓ₂))·I[J_v], requiring 2d₁|r ⇔ 2d₂|r.
pub fn family_d_pair(d1: i64, l1: i64, d2: i64, l2: i64, alg: &AlgebraSpec) -> Result<InvariantMatrix> {
    let r = alg.rank as i64;
    if (r % (2 * d1) == 0) != (r % (2 * d2) == 0) {
        return Err(Error::Constraint(format!("pair ({d1},{d2}) needs 2d₁|r ⇔ 2d₂|r")));
    }
    let a = family_d(d1, l1, alg)?;
    let b = family_d(d2, l2, alg)?;
    let ij = simple_current_invariant(SimpleCurrent::Jv, alg)?;
    half_sum_times(&a, &b, &ij, format!("D({d1},{l1}|{d2},{l2})"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DExceptional {
    I,
    II,
    III,
}

impl DExceptional {
    pub fn tag(&self) -> &'static str {
        match self {
            DExceptional::I => "i",
            DExceptional::II => "ii",
            DExceptional::III => "iii",
        }
    }
}

/// Dⁱ, Dⁱⁱ, Dⁱⁱⁱ, defined when r is a perfect square divisible by 16.
pub fn family_d_exceptional(tag: DExceptional, alg: &AlgebraSpec) -> Result<InvariantMatrix> {
    require_d2(alg)?;
    let r = alg.rank as i64;
    let root = r.sqrt();
    if root * root != r || r % 16 != 0 {
        return Err(Error::Constraint(format!("r = {r} must be a perfect square divisible by 16")));
    }
    if tag != DExceptional::I {
        let di = family_d_exceptional(DExceptional::I, alg)?;
        let ij = simple_current_invariant(SimpleCurrent::Jv, alg)?;
        let m = if tag == DExceptional::II { product(&di, &ij)? } else { product(&ij, &di)? };
        return Ok(m.with_name(format!("D^{}", tag.tag())));
    }
    let idx = Indexer::new(alg);
    let jv = SimpleCurrent::Jv;
    // C_j = {λ^b : 0 < b < r, 2b/√r ≡ ±j (mod 8)}. λ^r = J_s0 is left to the J_s-orbit
    // block; putting it in C_0 as well links it to C_4 and breaks S-invariance.
    let class = |j: i64| -> Result<Vec<usize>> {
        (1..r)
            .filter(|b| (2 * b) % root == 0 && congruent_pm(2 * b / root, j, 8))
            .map(|b| gamma(alg, b as u32).and_then(|g| idx.get(&g)))
            .collect()
    };
    let (c0, c1, c2, c3, c4) = (class(0)?, class(1)?, class(2)?, class(3)?, class(4)?);
    let lr = fundamental(alg, r as u32)?;
    let l = idx.get(&lr)?;
    let jl = idx.get(&apply_current(jv, &lr, alg)?)?;
    let vac = vacuum(alg);
    let js_orbit: Vec<usize> = [SimpleCurrent::Id, SimpleCurrent::Js]
        .iter()
        .map(|&j| apply_current(j, &vac, alg).and_then(|w| idx.get(&w)))
        .collect::<Result<_>>()?;
    let js_jv_orbit: Vec<usize> = [SimpleCurrent::Id, SimpleCurrent::Js]
        .iter()
        .map(|&j| {
            apply_current(jv, &vac, alg)
                .and_then(|w| apply_current(j, &w, alg))
                .and_then(|w| idx.get(&w))
        })
        .collect::<Result<_>>()?;

    let mut m = InvariantMatrix::zeros(alg, "D^i");
    let mut sym = |x: usize, y: usize| {
        m.entries[x][y] = 1;
        m.entries[y][x] = 1;
    };
    sym(l, l);
    sym(jl, jl);
    for &u in &c1 {
        sym(l, u);
    }
    for &u in &c3 {
        sym(jl, u);
    }
    let c04: Vec<usize> = c0.iter().chain(&c4).copied().collect();
    for &x in &c04 {
        for &y in &c04 {
            sym(x, y);
        }
    }
    for &x in &c2 {
        for &y in &c2 {
            sym(x, y);
        }
    }
    for &x in &js_orbit {
        for &y in &js_orbit {
            sym(x, y);
        }
        for &v in &c0 {
            sym(x, v);
        }
    }
    for &x in &js_jv_orbit {
        for &v in &c4 {
            sym(x, v);
        }
    }
    Ok(m)
}
