use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{AlgebraSpec, Series, Weight};
use crate::error::{Error, Result};
use crate::exact::Rational;

/// Nontrivial diagram symmetries moving the 0-node, plus the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SimpleCurrent {
    Id,
    /// Vector current of B_r.
    Jb,
    Jv,
    Js,
    Jc,
}

impl std::fmt::Display for SimpleCurrent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SimpleCurrent::Id => "id",
            SimpleCurrent::Jb => "Jb",
            SimpleCurrent::Jv => "Jv",
            SimpleCurrent::Js => "Js",
            SimpleCurrent::Jc => "Jc",
        };
        write!(f, "{s}")
    }
}

/// The current group of the algebra, in canonical order.
pub fn currents(alg: &AlgebraSpec) -> Vec<SimpleCurrent> {
    match alg.series {
        Series::B => vec![SimpleCurrent::Id, SimpleCurrent::Jb],
        Series::D => vec![
            SimpleCurrent::Id,
            SimpleCurrent::Jv,
            SimpleCurrent::Js,
            SimpleCurrent::Jc,
        ],
    }
}

fn check_member(j: SimpleCurrent, alg: &AlgebraSpec) -> Result<()> {
    if currents(alg).contains(&j) {
        Ok(())
    } else {
        Err(Error::ForeignCurrent(format!("{j} does not act on {alg}")))
    }
}

impl SimpleCurrent {
    pub fn order(&self, alg: &AlgebraSpec) -> u32 {
        match self {
            SimpleCurrent::Id => 1,
            SimpleCurrent::Jb | SimpleCurrent::Jv => 2,
            SimpleCurrent::Js | SimpleCurrent::Jc => {
                if alg.rank % 2 == 0 {
                    2
                } else {
                    4
                }
            }
        }
    }

    /// Coordinates in the current group: Z2 for B, Z2×Z2 (r even) or Z4 (r odd) for D.
    fn code(&self, alg: &AlgebraSpec) -> u32 {
        let odd = alg.rank % 2 == 1;
        match self {
            SimpleCurrent::Id => 0,
            SimpleCurrent::Jb => 1,
            SimpleCurrent::Jv => {
                if odd {
                    2
                } else {
                    1
                }
            }
            SimpleCurrent::Js => {
                if odd {
                    1
                } else {
                    2
                }
            }
            SimpleCurrent::Jc => 3,
        }
    }

    fn from_code(code: u32, alg: &AlgebraSpec) -> Self {
        let odd = alg.rank % 2 == 1;
        match (alg.series, code, odd) {
            (_, 0, _) => SimpleCurrent::Id,
            (Series::B, _, _) => SimpleCurrent::Jb,
            (Series::D, 3, _) => SimpleCurrent::Jc,
            (Series::D, 1, true) | (Series::D, 2, false) => SimpleCurrent::Js,
            _ => SimpleCurrent::Jv,
        }
    }

    /// Group product `self ∘ other`.
    pub fn compose(&self, other: &SimpleCurrent, alg: &AlgebraSpec) -> Result<SimpleCurrent> {
        check_member(*self, alg)?;
        check_member(*other, alg)?;
        let (a, b) = (self.code(alg), other.code(alg));
        let c = match alg.series {
            Series::B => a ^ b,
            Series::D if alg.rank % 2 == 1 => (a + b) % 4,
            Series::D => a ^ b,
        };
        Ok(SimpleCurrent::from_code(c, alg))
    }

    pub fn inverse(&self, alg: &AlgebraSpec) -> SimpleCurrent {
        self.power(self.order(alg) - 1, alg)
    }

    pub fn power(&self, e: u32, alg: &AlgebraSpec) -> SimpleCurrent {
        let mut out = SimpleCurrent::Id;
        for _ in 0..e % self.order(alg) {
            out = out.compose(self, alg).unwrap_or(SimpleCurrent::Id);
        }
        out
    }
}

/// Label permutation of a simple current.
pub fn apply_current(j: SimpleCurrent, w: &Weight, alg: &AlgebraSpec) -> Result<Weight> {
    check_member(j, alg)?;
    let r = alg.rank as usize;
    if w.0.len() != r + 1 {
        return Err(Error::UnknownWeight(w.0.clone()));
    }
    let l = &w.0;
    let out = match j {
        SimpleCurrent::Id => l.clone(),
        SimpleCurrent::Jb => {
            let mut v = l.clone();
            v.swap(0, 1);
            v
        }
        SimpleCurrent::Jv => {
            let mut v = l.clone();
            v.swap(0, 1);
            v.swap(r - 1, r);
            v
        }
        SimpleCurrent::Js => {
            if r % 2 == 0 {
                l.iter().rev().cloned().collect()
            } else {
                let mut v = Vec::with_capacity(r + 1);
                v.push(l[r - 1]);
                v.push(l[r]);
                for i in (0..=r - 2).rev() {
                    v.push(l[i]);
                }
                v
            }
        }
        SimpleCurrent::Jc => {
            let s = apply_current(SimpleCurrent::Js, w, alg)?;
            return apply_current(SimpleCurrent::Jv, &s, alg);
        }
    };
    Ok(Weight(out))
}

fn frac_mod1(q: Rational) -> Rational {
    let f = q.floor();
    q - f
}

/// Q_J(λ) mod 1, in [0, 1).
pub fn charge(j: SimpleCurrent, w: &Weight, alg: &AlgebraSpec) -> Result<Rational> {
    check_member(j, alg)?;
    let r = alg.rank as usize;
    let l = &w.0;
    let q = |num: i64, den: i64| Rational::new(BigInt::from(num), BigInt::from(den));
    let raw = match j {
        SimpleCurrent::Id => Rational::zero(),
        SimpleCurrent::Jb => q(l[r] as i64, 2),
        SimpleCurrent::Jv => q(l[r - 1] as i64 + l[r] as i64, 2),
        SimpleCurrent::Js => {
            let s: i64 = (1..=r - 2).map(|jj| jj as i64 * l[jj] as i64).sum();
            q(2 * s - (r as i64 - 2) * l[r - 1] as i64 - r as i64 * l[r] as i64, 4)
        }
        SimpleCurrent::Jc => {
            return Ok(frac_mod1(
                charge(SimpleCurrent::Jv, w, alg)? + charge(SimpleCurrent::Js, w, alg)?,
            ))
        }
    };
    Ok(frac_mod1(raw))
}

/// The integer R(J) of the norm–charge relation.
pub fn current_r(j: SimpleCurrent, alg: &AlgebraSpec) -> Result<i64> {
    check_member(j, alg)?;
    let k = alg.level as i64;
    Ok(match j {
        SimpleCurrent::Id => 0,
        SimpleCurrent::Jb | SimpleCurrent::Jv => 2 * k,
        SimpleCurrent::Js | SimpleCurrent::Jc => {
            let ns = j.order(alg) as i64;
            ns * (ns - 1) * k * alg.rank as i64 / 4
        }
    })
}

/// The subgroup generated by `gens`, in canonical order.
pub fn current_group(gens: &[SimpleCurrent], alg: &AlgebraSpec) -> Result<Vec<SimpleCurrent>> {
    let mut set: BTreeSet<SimpleCurrent> = BTreeSet::new();
    set.insert(SimpleCurrent::Id);
    loop {
        let before = set.len();
        let snapshot: Vec<_> = set.iter().cloned().collect();
        for a in &snapshot {
            for g in gens {
                set.insert(a.compose(g, alg)?);
            }
        }
        if set.len() == before {
            break;
        }
    }
    Ok(currents(alg).into_iter().filter(|j| set.contains(j)).collect())
}

/// The orbit {Jλ : J ∈ group} as a set.
pub fn simple_current_orbit(
    group: &[SimpleCurrent],
    w: &Weight,
    alg: &AlgebraSpec,
) -> Result<BTreeSet<Weight>> {
    group.iter().map(|j| apply_current(*j, w, alg)).collect()
}

/// Weights whose orbit under `group` is smaller than the group.
pub fn fixed_points(
    group: &[SimpleCurrent],
    weights: &[Weight],
    alg: &AlgebraSpec,
) -> Result<Vec<Weight>> {
    let mut out = Vec::new();
    for w in weights {
        if simple_current_orbit(group, w, alg)?.len() < group.len() {
            out.push(w.clone());
        }
    }
    Ok(out)
}

/// Partition of `weights` (by index) into orbits of `group`, in order of first appearance.
pub fn orbits(
    group: &[SimpleCurrent],
    weights: &[Weight],
    alg: &AlgebraSpec,
) -> Result<Vec<Vec<usize>>> {
    let mut seen = vec![false; weights.len()];
    let mut out = Vec::new();
    for i in 0..weights.len() {
        if seen[i] {
            continue;
        }
        let orb = simple_current_orbit(group, &weights[i], alg)?;
        let mut members = Vec::new();
        for (k, w) in weights.iter().enumerate() {
            if orb.contains(w) {
                seen[k] = true;
                members.push(k);
            }
        }
        out.push(members);
    }
    Ok(out)
}

/// Π(J): weights with integral charge for every current in the group.
pub fn untwisted_set(
    group: &[SimpleCurrent],
    weights: &[Weight],
    alg: &AlgebraSpec,
) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    'w: for (i, w) in weights.iter().enumerate() {
        for j in group {
            if !charge(*j, w, alg)?.is_zero() {
                continue 'w;
            }
        }
        out.push(i);
    }
    Ok(out)
}
