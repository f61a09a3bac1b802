//! Unfolding level-2 invariants with the vector-like current in J_L ∩ J_R onto the
//! U(1) system on Z/nZ, and the explicit basis B̃(d,ℓ) of its commutant.

use num_integer::Integer;
use serde::Serialize;

use super::commutant::{commutant_of, residue_classes, to_rational, CommutantBasis};
use crate::affine::named::gamma;
use crate::affine::{apply_current, AlgebraSpec, Series, SimpleCurrent};
use crate::error::{Error, Result};
use crate::invariants::InvariantMatrix;
use crate::modular::{build_unfolded, UnfoldedData};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Variant {
    /// B_{r,2}: n = 2r + 1, commuting with S̃ and T̃².
    B,
    /// D_{r,2}: n = 2r, commuting with S̃ and T̃.
    D,
}

impl Variant {
    fn of(alg: &AlgebraSpec) -> Result<Self> {
        match (alg.series, alg.level) {
            (Series::B, 2) => Ok(Variant::B),
            (Series::D, 2) => Ok(Variant::D),
            _ => Err(Error::Precondition(format!("unfolding needs level 2, got {alg}"))),
        }
    }

    fn current(self) -> SimpleCurrent {
        match self {
            Variant::B => SimpleCurrent::Jb,
            Variant::D => SimpleCurrent::Jv,
        }
    }

    pub fn system(self, n: i64) -> Result<UnfoldedData> {
        build_unfolded(n, self == Variant::D)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnfoldedMatrix {
    pub n: i64,
    pub entries: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct UnfoldedElement {
    pub d: i64,
    pub ell: i64,
    pub matrix: UnfoldedMatrix,
    /// An entry where this element, and no other element of the basis, is nonzero.
    pub distinguishing: (usize, usize),
}

/// B̃(d,ℓ)_{ab} = 1 iff n | da and b ≡ aℓ (mod d).
pub fn unfolded_matrix(n: i64, d: i64, ell: i64) -> UnfoldedMatrix {
    let entries = (0..n)
        .map(|a| (0..n).map(|b| ((d * a) % n == 0 && (b - a * ell).rem_euclid(d) == 0) as i64).collect())
        .collect();
    UnfoldedMatrix { n, entries }
}

pub fn unfolded_params(n: i64, variant: Variant) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for d in (1..=n).filter(|d| n % d == 0) {
        let (ok, modulus) = match variant {
            Variant::B => ((d * d) % n == 0, d * d / n),
            Variant::D => ((d * d) % (2 * n) == 0, 2 * d * d / n),
        };
        if !ok {
            continue;
        }
        for ell in 1..=d * d / n {
            if (ell * ell - 1).rem_euclid(modulus) == 0 {
                out.push((d, ell));
            }
        }
    }
    out
}

/// The entry (n/d, ℓ₀n/d + md) singled out in the independence proof, with ℓ₀ ≡ ℓ
/// (mod d²/n), ℓ₀² ≡ 1 (mod n), and m, 2ℓ₀ + m·d²/n both units mod n.
fn proof_entry(n: i64, d: i64, ell: i64) -> Option<(usize, usize)> {
    let q = d * d / n;
    let l0 = (1..=n).find(|&l| (l - ell).rem_euclid(q) == 0 && (l * l - 1).rem_euclid(n) == 0)?;
    let m = (1..=n).find(|&m| m.gcd(&n) == 1 && (2 * l0 + m * q).gcd(&n) == 1)?;
    Some(((n / d) as usize, (l0 * (n / d) + m * d).rem_euclid(n) as usize))
}

/// The explicit basis, each element with a distinguishing entry. The B variant uses the
/// entry from the independence proof and checks it; otherwise the first entry that
/// separates the element from the rest is taken.
pub fn unfolded_basis(n: i64, variant: Variant) -> Result<Vec<UnfoldedElement>> {
    if n < 1 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    let params = unfolded_params(n, variant);
    let mats: Vec<UnfoldedMatrix> = params.iter().map(|&(d, l)| unfolded_matrix(n, d, l)).collect();
    let separates = |k: usize, (i, j): (usize, usize)| {
        mats.iter().enumerate().all(|(o, m)| (m.entries[i][j] != 0) == (o == k))
    };
    let mut out = Vec::new();
    for (k, (&(d, ell), m)) in params.iter().zip(&mats).enumerate() {
        let entry = match variant {
            Variant::B => {
                let e = proof_entry(n, d, ell)
                    .ok_or_else(|| Error::Construction(format!("no ℓ₀, m for B̃({d},{ell}) at n = {n}")))?;
                if !separates(k, e) {
                    return Err(Error::Construction(format!("entry {e:?} does not single out B̃({d},{ell})")));
                }
                e
            }
            Variant::D => (0..n as usize)
                .flat_map(|i| (0..n as usize).map(move |j| (i, j)))
                .find(|&e| separates(k, e))
                .ok_or_else(|| Error::Construction(format!("B̃({d},{ell}) has no distinguishing entry")))?,
        };
        out.push(UnfoldedElement {
            d,
            ell,
            matrix: m.clone(),
            distinguishing: entry,
        });
    }
    Ok(out)
}

/// Exact commutant of the unfolded system.
pub fn unfolded_commutant(n: i64, variant: Variant) -> Result<CommutantBasis> {
    let u = variant.system(n)?;
    let pref: Vec<(usize, usize)> = (0..n as usize).flat_map(|i| (0..n as usize).map(move |j| (i, j))).collect();
    commutant_of(&u.kernel, &residue_classes(&u.t_residues), &pref)
}

/// (P̃1): M̃ commutes with S̃ and with T̃² (B) or T̃ (D).
pub fn commutes_unfolded(m: &UnfoldedMatrix, variant: Variant) -> Result<bool> {
    let u = variant.system(m.n)?;
    let n = m.n as usize;
    for a in 0..n {
        for b in 0..n {
            if m.entries[a][b] != 0 && u.t_residues[a] != u.t_residues[b] {
                return Ok(false);
            }
        }
    }
    Ok(u.kernel.left_int(&m.entries)? == u.kernel.right_int(&m.entries)?)
}

/// (P̃1), (P̃2) and (P̃3) in turn.
pub fn unfolded_conditions(m: &UnfoldedMatrix, variant: Variant) -> Result<[bool; 3]> {
    let n = m.n;
    let e = &m.entries;
    let at = |a: i64, b: i64| e[a.rem_euclid(n) as usize][b.rem_euclid(n) as usize];
    let p2 = (0..n).all(|a| (0..n).all(|b| at(-a, b) == at(a, b) && at(a, -b) == at(a, b)));
    let p3 = e[0][0] == 4 && (0..n).all(|a| at(a, 0) % 2 == 0 && at(0, a) % 2 == 0) && e.iter().flatten().all(|&x| x >= 0);
    Ok([commutes_unfolded(m, variant)?, p2, p3])
}

/// Orbit representatives λ^a = γ^a, a = 0..=r, and the edge indices where the folding
/// weight is ½ per side.
fn layout(alg: &AlgebraSpec, variant: Variant) -> (i64, i64, Vec<i64>) {
    let r = alg.rank as i64;
    let n = alg.n() as i64;
    let edge = match variant {
        Variant::B => vec![0],
        Variant::D => vec![0, r],
    };
    (r, n, edge)
}

pub fn unfold(m: &InvariantMatrix) -> Result<UnfoldedMatrix> {
    let alg = m.alg;
    let variant = Variant::of(&alg)?;
    let (r, n, edge) = layout(&alg, variant);
    let idx: Vec<usize> = (0..=r)
        .map(|a| gamma(&alg, a as u32).and_then(|g| index(&alg, &g)))
        .collect::<Result<_>>()?;
    let j0 = index(&alg, &apply_current(variant.current(), &gamma(&alg, 0)?, &alg)?)?;
    if m.entries[j0][0] == 0 || m.entries[0][j0] == 0 {
        return Err(Error::Precondition(format!(
            "{} does not have {} in both J_L and J_R",
            m.name,
            variant.current()
        )));
    }
    let fold_factor = |a: i64| if edge.contains(&a) { 2 } else { 1 };
    let rep = |a: i64| a.min(n - a);
    let entries: Vec<Vec<i64>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let (x, y) = (rep(a), rep(b));
                    m.entries[idx[x as usize]][idx[y as usize]] * fold_factor(x) * fold_factor(y)
                })
                .collect()
        })
        .collect();
    let mt = UnfoldedMatrix { n, entries };
    if fold(&mt, &alg)?.entries != m.entries {
        return Err(Error::Precondition(format!("{} is not determined by its γ-block", m.name)));
    }
    Ok(mt)
}

fn index(alg: &AlgebraSpec, w: &crate::affine::Weight) -> Result<usize> {
    crate::affine::enumerate_weights(alg)
        .iter()
        .position(|x| x == w)
        .ok_or_else(|| Error::UnknownWeight(w.0.clone()))
}

/// M_{J^iγ^a, J^jγ^b} = M̃_{ab}·w(a)w(b) with w = ½ on the edge, 1 elsewhere; all other
/// entries vanish.
pub fn fold(mt: &UnfoldedMatrix, alg: &AlgebraSpec) -> Result<InvariantMatrix> {
    let variant = Variant::of(alg)?;
    let (r, n, edge) = layout(alg, variant);
    if mt.n != n {
        return Err(Error::DimensionMismatch {
            expected: n as usize,
            got: mt.n as usize,
        });
    }
    let j = variant.current();
    let mut m = InvariantMatrix::zeros(alg, "fold");
    let orbit = |a: i64| -> Result<Vec<usize>> {
        let g = gamma(alg, a as u32)?;
        let mut v = vec![index(alg, &g)?, index(alg, &apply_current(j, &g, alg)?)?];
        v.dedup();
        Ok(v)
    };
    for a in 0..=r {
        for b in 0..=r {
            let mut v = mt.entries[a as usize][b as usize];
            let div = if edge.contains(&a) { 2 } else { 1 } * if edge.contains(&b) { 2 } else { 1 };
            if v % div != 0 {
                return Err(Error::Precondition(format!("M̃[{a}][{b}] = {v} is not divisible by {div}")));
            }
            v /= div;
            for &x in &orbit(a)? {
                for &y in &orbit(b)? {
                    m.entries[x][y] = v;
                }
            }
        }
    }
    Ok(m)
}

pub fn span_matches(n: i64, variant: Variant) -> Result<bool> {
    let basis = unfolded_basis(n, variant)?;
    let comm = unfolded_commutant(n, variant)?;
    Ok(basis.len() == comm.dimension() && basis.iter().all(|e| comm.coordinates(&to_rational(&e.matrix.entries)).is_some()))
}
