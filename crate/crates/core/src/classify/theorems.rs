//! The lists of physical invariants the classification theorems assert, generated from
//! the family constructors over their parameter ranges and de-duplicated by exact
//! equality, plus the closed-form counts and the reference tables.

use num_integer::Roots;
use serde::Serialize;

use crate::affine::{conjugations, AlgebraSpec, Series, SimpleCurrent};
use crate::error::{Error, Result};
use crate::invariants::{
    conjugation_matrix, exceptional_d73, family_b, family_b_exceptional, family_b_pair, family_d,
    family_d_exceptional, family_d_pair, product, simple_current_invariant, BExceptional, DExceptional,
    InvariantMatrix,
};

/// Totals for B_{r,2}, r = 3..=12.
pub const REFERENCE_B2_TOTALS: [usize; 10] = [2, 9, 2, 2, 5, 2, 2, 5, 2, 9];
/// Totals and exceptional counts for D_{r,2}, r = 4..=16.
pub const REFERENCE_D2_TOTALS: [usize; 13] = [16, 3, 8, 3, 8, 7, 7, 3, 12, 3, 7, 7, 22];
pub const REFERENCE_D2_EXCEPTIONAL: [usize; 13] = [0, 0, 2, 0, 0, 4, 1, 0, 4, 0, 1, 4, 14];

#[derive(Clone, Debug, Serialize)]
pub struct ListedInvariant {
    #[serde(flatten)]
    pub matrix: InvariantMatrix,
    pub exceptional: bool,
    pub symmetric: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremList {
    pub algebra: String,
    pub invariants: Vec<ListedInvariant>,
}

impl TheoremList {
    pub fn total(&self) -> usize {
        self.invariants.len()
    }

    pub fn exceptional_count(&self) -> usize {
        self.invariants.iter().filter(|x| x.exceptional).count()
    }

    pub fn contains(&self, m: &InvariantMatrix) -> bool {
        self.invariants.iter().any(|x| x.matrix.entries == m.entries)
    }
}

struct Builder {
    alg: AlgebraSpec,
    out: Vec<ListedInvariant>,
}

impl Builder {
    fn push(&mut self, m: InvariantMatrix, exceptional: bool) {
        if self.out.iter().any(|x| x.matrix.entries == m.entries) {
            return;
        }
        let symmetric = m.is_symmetric();
        self.out.push(ListedInvariant {
            matrix: m,
            exceptional,
            symmetric,
        });
    }

    fn finish(self) -> TheoremList {
        TheoremList {
            algebra: self.alg.to_string(),
            invariants: self.out,
        }
    }
}

fn conj_mats(alg: &AlgebraSpec) -> Result<Vec<InvariantMatrix>> {
    conjugations(alg).into_iter().map(|c| conjugation_matrix(c, alg)).collect()
}

/// C_i·M·C_j, named accordingly.
fn sandwich(ci: &InvariantMatrix, m: &InvariantMatrix, cj: &InvariantMatrix) -> Result<InvariantMatrix> {
    let x = product(&product(ci, m)?, cj)?;
    let mut name = String::new();
    if ci.name != "I" {
        name.push_str(&ci.name);
        name.push('·');
    }
    name.push_str(&m.name);
    if cj.name != "I" {
        name.push('·');
        name.push_str(&cj.name);
    }
    Ok(x.with_name(name))
}

/// (d, ℓ) with d | m, m | d², lo ≤ ℓ < hi and ℓ² ≡ 1 (mod modulus(d)).
fn family_params(
    m: i64,
    range: impl Fn(i64) -> (i64, i64),
    modulus: impl Fn(i64) -> i64,
) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for d in (1..=m).filter(|d| m % d == 0 && (d * d) % m == 0) {
        let (lo, hi) = range(d);
        for ell in lo..hi {
            if (ell * ell - 1).rem_euclid(modulus(d)) == 0 {
                out.push((d, ell));
            }
        }
    }
    out
}

pub fn b_level_two_params(alg: &AlgebraSpec) -> Vec<(i64, i64)> {
    let n = alg.n() as i64;
    // 0 ≤ ℓ < d²/2n; the bound is strict and may be fractional
    family_params(n, |d| (0, (d * d + 2 * n - 1) / (2 * n)), |d| d * d / n)
}

pub fn d_level_two_params(alg: &AlgebraSpec) -> Vec<(i64, i64)> {
    let r = alg.rank as i64;
    family_params(r, |d| (1, d * d / r + 1), |d| 4 * d * d / r)
}

fn b_level_two(alg: &AlgebraSpec) -> Result<TheoremList> {
    let n = alg.n() as i64;
    let mut b = Builder { alg: *alg, out: Vec::new() };
    let ps = b_level_two_params(alg);
    for &(d, l) in &ps {
        b.push(family_b(d, l, alg)?, (d, l) != (n, 1));
    }
    for (x, &(d1, l1)) in ps.iter().enumerate() {
        for &(d2, l2) in &ps[x..] {
            b.push(family_b_pair(d1, l1, d2, l2, alg)?, (d1, l1, d2, l2) != (n, 1, n, 1));
        }
    }
    let root = n.sqrt();
    if root * root == n {
        for t in [BExceptional::I, BExceptional::II, BExceptional::III, BExceptional::IV] {
            b.push(family_b_exceptional(t, alg)?, true);
        }
    }
    Ok(b.finish())
}

/// Every C_i·X·C_j for the simple-current invariants X the classification calls
/// non-exceptional.
fn d_level_two_standard(alg: &AlgebraSpec, cs: &[InvariantMatrix]) -> Result<Vec<InvariantMatrix>> {
    let r = alg.rank;
    let iv = simple_current_invariant(SimpleCurrent::Jv, alg)?;
    let is = simple_current_invariant(SimpleCurrent::Js, alg)?;
    let mut base = vec![InvariantMatrix::identity(alg), iv.clone()];
    if r % 4 == 2 || r % 4 == 0 {
        base.push(is.clone());
        base.push(product(&iv, &is)?);
    }
    let mut out = Vec::new();
    for x in &base {
        for ci in cs {
            for cj in cs {
                out.push(sandwich(ci, x, cj)?);
            }
        }
    }
    Ok(out)
}

fn d_level_two(alg: &AlgebraSpec) -> Result<TheoremList> {
    let r = alg.rank as i64;
    let cs = conj_mats(alg)?;
    let standard = d_level_two_standard(alg, &cs)?;
    let is_exceptional = |m: &InvariantMatrix| !standard.iter().any(|s| s.entries == m.entries);
    let mut b = Builder { alg: *alg, out: Vec::new() };
    let ps = d_level_two_params(alg);
    for &(d, l) in &ps {
        let m = family_d(d, l, alg)?;
        let left: &[InvariantMatrix] = if r % (2 * d) == 0 { &cs } else { &cs[..1] };
        for ci in left {
            for cj in &cs {
                let x = sandwich(ci, &m, cj)?;
                let e = is_exceptional(&x);
                b.push(x, e);
            }
        }
    }
    for (x, &(d1, l1)) in ps.iter().enumerate() {
        for &(d2, l2) in &ps[x..] {
            if (r % (2 * d1) == 0) != (r % (2 * d2) == 0) {
                continue;
            }
            let m = family_d_pair(d1, l1, d2, l2, alg)?;
            let e = is_exceptional(&m);
            b.push(m, e);
        }
    }
    let root = r.sqrt();
    if root * root == r && r % 16 == 0 {
        let di = family_d_exceptional(DExceptional::I, alg)?;
        let dii = family_d_exceptional(DExceptional::II, alg)?;
        let diii = family_d_exceptional(DExceptional::III, alg)?;
        let id = InvariantMatrix::identity(alg);
        for ci in &cs {
            for cj in &cs {
                b.push(sandwich(ci, &di, cj)?, true);
            }
            b.push(sandwich(ci, &dii, &id)?, true);
            b.push(sandwich(&id, &diii, ci)?, true);
        }
    }
    Ok(b.finish())
}

fn level_three(alg: &AlgebraSpec) -> Result<TheoremList> {
    let mut b = Builder { alg: *alg, out: Vec::new() };
    let id = InvariantMatrix::identity(alg);
    match alg.series {
        Series::B => {
            b.push(id, false);
            b.push(simple_current_invariant(SimpleCurrent::Jb, alg)?, false);
        }
        Series::D => {
            let r = alg.rank;
            let cs = conj_mats(alg)?;
            let iv = simple_current_invariant(SimpleCurrent::Jv, alg)?;
            for ci in &cs {
                b.push(sandwich(ci, &id, &id)?, false);
                b.push(sandwich(ci, &iv, &id)?, false);
            }
            let is = simple_current_invariant(SimpleCurrent::Js, alg)?;
            if r % 8 == 4 {
                let ic = simple_current_invariant(SimpleCurrent::Jc, alg)?;
                let ms = [is.clone(), ic.clone(), product(&is, &ic)?, product(&ic, &is)?];
                for ci in &cs {
                    for m in &ms {
                        b.push(sandwich(ci, m, &id)?, false);
                    }
                }
            }
            if r % 8 == 0 {
                let ms = [is.clone(), product(&iv, &is)?];
                for ci in &cs {
                    for m in &ms {
                        for cj in &cs {
                            b.push(sandwich(ci, m, cj)?, false);
                        }
                    }
                }
            }
            if r == 7 {
                let e = exceptional_d73()?;
                for ci in &cs {
                    b.push(sandwich(ci, &e, &id)?, true);
                }
            }
        }
    }
    Ok(b.finish())
}

fn level_one(alg: &AlgebraSpec) -> Result<TheoremList> {
    let mut b = Builder { alg: *alg, out: Vec::new() };
    let id = InvariantMatrix::identity(alg);
    match alg.series {
        Series::B => b.push(id, false),
        Series::D => {
            let cs = conj_mats(alg)?;
            if alg.rank % 4 != 0 {
                for c in &cs {
                    b.push(c.clone(), false);
                }
            } else {
                let is = simple_current_invariant(SimpleCurrent::Js, alg)?;
                for ci in &cs {
                    b.push(ci.clone(), false);
                }
                for ci in &cs[..2] {
                    for cj in &cs[..2] {
                        b.push(sandwich(ci, &is, cj)?, false);
                    }
                }
            }
        }
    }
    Ok(b.finish())
}

pub fn theorem_list(alg: &AlgebraSpec) -> Result<TheoremList> {
    match (alg.series, alg.level) {
        (_, 1) => level_one(alg),
        (Series::B, 2) => b_level_two(alg),
        (Series::D, 2) => d_level_two(alg),
        (_, 3) => level_three(alg),
        _ => Err(Error::Unsupported(format!("no classification is listed for {alg}"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountPrediction {
    pub algebra: String,
    pub total: usize,
    /// Per-part counts, e.g. ("a", 4).
    pub parts: Vec<(String, usize)>,
    pub reference_total: Option<usize>,
    pub reference_exceptional: Option<usize>,
}

/// Number of divisors d ≤ √m of m.
pub fn small_divisor_count(m: i64) -> usize {
    (1..=m.sqrt()).filter(|d| m % d == 0).count()
}

pub fn count_formulas(alg: &AlgebraSpec) -> Result<CountPrediction> {
    let r = alg.rank as i64;
    let mut parts: Vec<(String, usize)> = Vec::new();
    let (mut reference_total, mut reference_exceptional) = (None, None);
    match (alg.series, alg.level) {
        (Series::B, 1) => parts.push(("identity".into(), 1)),
        (Series::D, 1) => parts.push(("all".into(), if r % 4 == 0 { 6 } else { 2 })),
        (Series::B, 2) => {
            let n = alg.n() as i64;
            let d = small_divisor_count(n);
            parts.push(("a".into(), d));
            parts.push(("b".into(), d * (d + 1) / 2));
            let root = n.sqrt();
            parts.push(("c".into(), if root * root == n { 4 } else { 0 }));
            reference_total = (3..=12).contains(&r).then(|| REFERENCE_B2_TOTALS[(r - 3) as usize]);
        }
        (Series::D, 2) => {
            if r == 4 {
                parts.push(("D(4,1)·C_i".into(), 6));
                parts.push(("C_i·D(2,1)·C_j".into(), 9));
                parts.push(("D(2,1|2,1)".into(), 1));
            } else {
                let d = small_divisor_count(r);
                let d0 = if r % 4 == 0 {
                    let two_c = 1i64 << r.trailing_zeros();
                    small_divisor_count(2 * r / two_c)
                } else {
                    d
                };
                let d1 = d - d0;
                parts.push(("a".into(), 2 * d0 + 4 * d1));
                parts.push(("b".into(), d0 * (d0 + 1) / 2 + d1 * (d1 + 1) / 2));
                let root = r.sqrt();
                parts.push(("c".into(), if root * root == r && r % 16 == 0 { 8 } else { 0 }));
            }
            if (4..=16).contains(&r) {
                reference_total = Some(REFERENCE_D2_TOTALS[(r - 4) as usize]);
                reference_exceptional = Some(REFERENCE_D2_EXCEPTIONAL[(r - 4) as usize]);
            }
        }
        (Series::B, 3) => parts.push(("all".into(), 2)),
        (Series::D, 3) => {
            let c = conjugations(alg).len();
            let mut t = 2 * c;
            if r % 8 == 4 {
                t += 4 * c;
            }
            if r % 8 == 0 {
                t += 2 * c * c;
            }
            if r == 7 {
                t += c;
            }
            parts.push(("all, before coincidences".into(), t));
        }
        _ => return Err(Error::Unsupported(format!("no count formula for {alg}"))),
    }
    Ok(CountPrediction {
        algebra: alg.to_string(),
        total: parts.iter().map(|p| p.1).sum(),
        parts,
        reference_total,
        reference_exceptional,
    })
}
