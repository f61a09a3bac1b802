//! (λ+ρ)² − ρ², by the quadratic form and by the closed forms.

use num_bigint::BigInt;
use num_traits::Zero;

use super::named::{fundamental, gamma, mu};
use super::{
    apply_conjugation, apply_current, charge, conjugations, current_r, currents, AlgebraSpec,
    Series, SimpleCurrent, Weight,
};
use crate::error::{Error, Result};
use crate::exact::Rational;

/// Orthogonal coordinates of λ+ρ, doubled so they are integers.
pub fn doubled_coordinates(w: &Weight, alg: &AlgebraSpec) -> Vec<i64> {
    let r = alg.rank as usize;
    let l: Vec<i64> = w.0.iter().map(|&x| x as i64).collect();
    match alg.series {
        Series::B => (1..=r)
            .map(|i| {
                let s: i64 = (i..r).map(|j| l[j]).sum();
                2 * s + l[r] + 2 * (r - i) as i64 + 1
            })
            .collect(),
        Series::D => (1..=r)
            .map(|i| {
                if i == r {
                    l[r] - l[r - 1]
                } else {
                    let s: i64 = (i..=r.saturating_sub(2)).map(|j| l[j]).sum();
                    2 * s + l[r - 1] + l[r] + 2 * (r - i) as i64
                }
            })
            .collect(),
    }
}

fn q(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// (λ+ρ)² − ρ² from the standard inner product (long roots of length² 2).
pub fn inner_product_norm(w: &Weight, alg: &AlgebraSpec) -> Rational {
    let vac = Weight::from_fundamentals(alg, &[]).expect("vacuum");
    let a: i64 = doubled_coordinates(w, alg).iter().map(|x| x * x).sum();
    let b: i64 = doubled_coordinates(&vac, alg).iter().map(|x| x * x).sum();
    q(a - b, 4)
}

/// The closed form, for the named representatives that have one.
pub fn closed_form_norm(w: &Weight, alg: &AlgebraSpec) -> Option<Rational> {
    let r = alg.rank as i64;
    let n = alg.n() as i64;
    let k = alg.level;
    let is = |x: Result<Weight>| x.map(|v| &v == w).unwrap_or(false);
    if w.is_vacuum() {
        return Some(Rational::zero());
    }
    match (alg.series, k) {
        (Series::B, 2) => {
            for a in 1..=r {
                if is(gamma(alg, a as u32)) {
                    return Some(q(n * a - a * a, 1));
                }
            }
            let lr = fundamental(alg, r as u32).ok()?;
            for j in 0..2i64 {
                let x = if j == 0 { lr.clone() } else { apply_current(SimpleCurrent::Jb, &lr, alg).ok()? };
                if &x == w {
                    return Some(q(4 * j * n + r * n, 4));
                }
            }
            None
        }
        (Series::D, 2) => {
            for c in 1..=r {
                if is(gamma(alg, c as u32)) {
                    return Some(q(2 * r * c - c * c, 1));
                }
            }
            for s in [r, r - 1] {
                let base = fundamental(alg, s as u32).ok()?;
                for j in 0..2i64 {
                    let x = if j == 0 { base.clone() } else { apply_current(SimpleCurrent::Jv, &base, alg).ok()? };
                    if &x == w {
                        return Some(q(4 * j * n + 2 * r * r - r, 4));
                    }
                }
            }
            None
        }
        (Series::B, 3) => {
            let lr = fundamental(alg, r as u32).ok()?;
            for i in 0..2i64 {
                let x = if i == 0 { lr.clone() } else { apply_current(SimpleCurrent::Jb, &lr, alg).ok()? };
                if &x == w {
                    return Some(q(2 * r * r + r + 8 * n * i, 4));
                }
            }
            for a in 1..=r {
                let g = gamma(alg, a as u32).ok()?;
                for i in 0..2i64 {
                    let x = if i == 0 { g.clone() } else { apply_current(SimpleCurrent::Jb, &g, alg).ok()? };
                    if &x == w {
                        return Some(q(a * (2 * r + 1 - a) + n * i, 1));
                    }
                }
                if is(mu(alg, a as u32)) {
                    return Some(q(r * (2 * r + 1) + 4 * a * (n - a), 4));
                }
            }
            None
        }
        (Series::D, 3) => {
            for a in 1..=r {
                if is(gamma(alg, a as u32)) {
                    return Some(q(a * (2 * r - a), 1));
                }
            }
            None
        }
        _ => None,
    }
}

fn mod_m(x: Rational, m: i64) -> Rational {
    let mm = Rational::from_integer(BigInt::from(m));
    let t = (&x / &mm).floor();
    x - t * mm
}

/// (λ+ρ)² − ρ² mod 2n derived from the closed forms, moving along current orbits with
/// the norm–charge relation. `None` if no representative with a closed form reaches λ.
pub fn norm_residue(w: &Weight, alg: &AlgebraSpec) -> Result<Option<Rational>> {
    let two_n = 2 * alg.n() as i64;
    let reps: Vec<Weight> = crate::affine::enumerate_weights(alg)
        .into_iter()
        .filter(|x| closed_form_norm(x, alg).is_some())
        .collect();
    for rep in &reps {
        let base = closed_form_norm(rep, alg).expect("filtered");
        for c in conjugations(alg) {
            let cr = apply_conjugation(c, rep, alg)?;
            for j in currents(alg) {
                if &apply_current(j, &cr, alg)? != w {
                    continue;
                }
                let big_n = j.order(alg) as i64;
                let shift = if j == SimpleCurrent::Id {
                    Rational::zero()
                } else {
                    let rr = current_r(j, alg)?;
                    q(rr * (big_n - 1), 2 * big_n) - charge(j, &cr, alg)?
                };
                let val = base + shift * Rational::from_integer(BigInt::from(two_n));
                return Ok(Some(mod_m(val, two_n)));
            }
        }
    }
    Ok(None)
}

/// (λ+ρ)² − ρ², by the quadratic form, cross-checked against the closed forms: exactly
/// where a closed form exists, and mod 2n wherever one propagates.
pub fn norm_shift(w: &Weight, alg: &AlgebraSpec) -> Result<Rational> {
    let value = inner_product_norm(w, alg);
    if let Some(c) = closed_form_norm(w, alg) {
        if c != value {
            return Err(Error::Construction(format!(
                "closed-form norm {c} disagrees with quadratic form {value} at {w} in {alg}"
            )));
        }
    }
    if let Some(res) = norm_residue(w, alg)? {
        let two_n = 2 * alg.n() as i64;
        if mod_m(value.clone(), two_n) != res {
            return Err(Error::Construction(format!(
                "norm residue {res} disagrees with quadratic form {value} at {w} in {alg}"
            )));
        }
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::enumerate_weights;

    #[test]
    fn reference_values() {
        let b42 = AlgebraSpec::b(4, 2);
        assert_eq!(norm_shift(&gamma(&b42, 1).unwrap(), &b42).unwrap(), q(8, 1));
        let d73 = AlgebraSpec::d(7, 3);
        assert_eq!(norm_shift(&gamma(&d73, 5).unwrap(), &d73).unwrap(), q(45, 1));
        assert!(norm_shift(&gamma(&d73, 0).unwrap(), &d73).unwrap().is_zero());
    }

    #[test]
    fn every_weight_agrees() {
        for r in 3..=9 {
            for k in 1..=3 {
                let alg = AlgebraSpec::b(r, k);
                for w in enumerate_weights(&alg) {
                    norm_shift(&w, &alg).unwrap();
                }
            }
        }
        for r in 4..=10 {
            for k in 1..=3 {
                let alg = AlgebraSpec::d(r, k);
                for w in enumerate_weights(&alg) {
                    norm_shift(&w, &alg).unwrap();
                    if k > 1 {
                        assert!(norm_residue(&w, &alg).unwrap().is_some(), "{w} in {alg}");
                    }
                }
            }
        }
    }

    #[test]
    fn coordinates() {
        let alg = AlgebraSpec::d(4, 1);
        let vac = Weight::from_fundamentals(&alg, &[]).unwrap();
        assert_eq!(doubled_coordinates(&vac, &alg), vec![6, 4, 2, 0]);
        let b = AlgebraSpec::b(3, 1);
        let vb = Weight::from_fundamentals(&b, &[]).unwrap();
        assert_eq!(doubled_coordinates(&vb, &b), vec![5, 3, 1]);
    }
}
