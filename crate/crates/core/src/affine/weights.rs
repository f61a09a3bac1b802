use super::{apply_conjugation, apply_current, AlgebraSpec, Conjugation, Series, SimpleCurrent, Weight};
use crate::error::{Error, Result};

/// All label vectors satisfying the level constraint, in lexicographic order.
pub fn enumerate_raw(alg: &AlgebraSpec) -> Vec<Weight> {
    fn rec(i: usize, left: u32, marks: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Weight>) {
        if i == marks.len() {
            let mut w = vec![left];
            w.extend_from_slice(cur);
            out.push(Weight(w));
            return;
        }
        let mut c = 0;
        while c * marks[i] <= left {
            cur.push(c);
            rec(i + 1, left - c * marks[i], marks, cur, out);
            cur.pop();
            c += 1;
        }
    }
    let marks = alg.comarks();
    let mut out = Vec::new();
    rec(1, alg.level, &marks, &mut Vec::new(), &mut out);
    out.sort();
    out
}

pub fn is_spinor(w: &Weight, alg: &AlgebraSpec) -> bool {
    let r = alg.rank as usize;
    match alg.series {
        Series::B => w.0[r] % 2 == 1,
        Series::D => (w.0[r - 1] + w.0[r]) % 2 == 1,
    }
}

/// The named weights used throughout: γ^a (also written λ^a for D at level 2),
/// μ^a for B at level 3, and the spinor fundamentals.
pub mod named {
    use super::*;

    pub fn vacuum(alg: &AlgebraSpec) -> Weight {
        Weight::from_fundamentals(alg, &[]).expect("vacuum exists")
    }

    /// γ^0 = 0, γ^a = Λ_a, with the last one or two replaced by the spinor-pair sums.
    pub fn gamma(alg: &AlgebraSpec, a: u32) -> Result<Weight> {
        let r = alg.rank;
        let terms: Vec<(usize, u32)> = match alg.series {
            Series::B => match a {
                0 => vec![],
                a if a < r => vec![(a as usize, 1)],
                a if a == r => vec![(r as usize, 2)],
                _ => return Err(Error::Precondition(format!("γ^{a} needs a ≤ {r}"))),
            },
            Series::D => match a {
                0 => vec![],
                a if a + 2 <= r => vec![(a as usize, 1)],
                a if a + 1 == r => vec![((r - 1) as usize, 1), (r as usize, 1)],
                a if a == r => vec![(r as usize, 2)],
                _ => return Err(Error::Precondition(format!("γ^{a} needs a ≤ {r}"))),
            },
        };
        Weight::from_fundamentals(alg, &terms)
    }

    /// μ^a = Λ_a + Λ_r for a < r and μ^r = 3Λ_r (B-series, level 3).
    pub fn mu(alg: &AlgebraSpec, a: u32) -> Result<Weight> {
        let r = alg.rank;
        if alg.series != Series::B || a == 0 || a > r {
            return Err(Error::Precondition(format!("μ^{a} is defined for B with 1 ≤ a ≤ r")));
        }
        if a == r {
            Weight::from_fundamentals(alg, &[(r as usize, 3)])
        } else {
            Weight::from_fundamentals(alg, &[(a as usize, 1), (r as usize, 1)])
        }
    }

    /// Λ_i for 1 ≤ i ≤ r.
    pub fn fundamental(alg: &AlgebraSpec, i: u32) -> Result<Weight> {
        Weight::from_fundamentals(alg, &[(i as usize, 1)])
    }
}

fn push_unique(list: &mut Vec<Weight>, w: Weight) {
    if !list.contains(&w) {
        list.push(w);
    }
}

/// P_+ in canonical order: named nonspinor representatives, their current images,
/// then spinors, then anything reached only through C₁. See the crate README for the
/// order at each (series, level).
pub fn enumerate_weights(alg: &AlgebraSpec) -> Vec<Weight> {
    let r = alg.rank;
    let cur = |j: SimpleCurrent, w: &Weight| apply_current(j, w, alg).expect("current of this algebra");
    let g = |a: u32| named::gamma(alg, a).expect("γ^a exists");
    let vac = named::vacuum(alg);
    let mut out: Vec<Weight> = Vec::new();
    match (alg.series, alg.level) {
        (Series::B, 1) => {
            out.push(vac.clone());
            out.push(cur(SimpleCurrent::Jb, &vac));
            out.push(named::fundamental(alg, r).unwrap());
        }
        (Series::D, 1) => {
            for j in super::currents(alg) {
                out.push(cur(j, &vac));
            }
        }
        (Series::B, 2) => {
            for a in 0..=r {
                out.push(g(a));
            }
            push_unique(&mut out, cur(SimpleCurrent::Jb, &vac));
            let lr = named::fundamental(alg, r).unwrap();
            push_unique(&mut out, lr.clone());
            push_unique(&mut out, cur(SimpleCurrent::Jb, &lr));
        }
        (Series::D, 2) => {
            for a in 0..=r {
                out.push(g(a));
            }
            for a in 0..=r {
                push_unique(&mut out, cur(SimpleCurrent::Jv, &g(a)));
            }
            let lr = named::fundamental(alg, r).unwrap();
            let lr1 = named::fundamental(alg, r - 1).unwrap();
            push_unique(&mut out, lr.clone());
            push_unique(&mut out, lr1.clone());
            push_unique(&mut out, cur(SimpleCurrent::Jv, &lr));
            push_unique(&mut out, cur(SimpleCurrent::Jv, &lr1));
        }
        (Series::B, _) => {
            for a in 0..=r {
                out.push(g(a));
            }
            for a in 0..=r {
                push_unique(&mut out, cur(SimpleCurrent::Jb, &g(a)));
            }
            let lr = named::fundamental(alg, r).unwrap();
            push_unique(&mut out, lr.clone());
            push_unique(&mut out, cur(SimpleCurrent::Jb, &lr));
            for a in 1..=r {
                push_unique(&mut out, named::mu(alg, a).unwrap());
            }
        }
        (Series::D, _) => {
            for a in 0..=r {
                out.push(g(a));
            }
            for j in [SimpleCurrent::Jv, SimpleCurrent::Js, SimpleCurrent::Jc] {
                for a in 0..=r {
                    push_unique(&mut out, cur(j, &g(a)));
                }
            }
            let extra = apply_conjugation(Conjugation(1), &g(r), alg).unwrap();
            for j in super::currents(alg) {
                push_unique(&mut out, cur(j, &extra));
            }
        }
    }
    // Safety net: anything the named construction missed goes last, sorted.
    for w in enumerate_raw(alg) {
        push_unique(&mut out, w);
    }
    out
}
