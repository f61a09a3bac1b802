//! Invariants whose vacuum row and column are exactly the orbit J0: when no weight of
//! Π(J) is fixed by J, M is a permutation π of the orbits Π(J)/J that preserves S, and
//! M_{λμ} = 1 iff μ lies in π(Jλ).

use super::commutant::residue_classes;
use crate::affine::{current_group, orbits, untwisted_set, SimpleCurrent};
use crate::error::{Error, Result};
use crate::invariants::{verify_physical, InvariantMatrix};
use crate::modular::ModularData;

#[derive(Clone, Debug)]
pub struct Ade7Result {
    /// Orbit permutations preserving S (and the vacuum orbit).
    pub permutations: Vec<Vec<usize>>,
    /// The matrices built from them that are physical.
    pub invariants: Vec<InvariantMatrix>,
}

pub fn ade7_search(md: &ModularData, gens: &[SimpleCurrent]) -> Result<Ade7Result> {
    let alg = &md.alg;
    let group = current_group(gens, alg)?;
    let pi = untwisted_set(&group, &md.weights, alg)?;
    let members: Vec<_> = pi.iter().map(|&i| md.weights[i].clone()).collect();
    let orbs: Vec<Vec<usize>> = orbits(&group, &members, alg)?
        .into_iter()
        .map(|o| o.into_iter().map(|k| pi[k]).collect())
        .collect();
    if let Some(o) = orbs.iter().find(|o| o.len() < group.len()) {
        return Err(Error::Precondition(format!(
            "{} is a fixed point of the current group in Π(J); use enumerate_physical",
            md.weights[o[0]]
        )));
    }
    let reps: Vec<usize> = orbs.iter().map(|o| o[0]).collect();
    let k = reps.len();
    // S is constant on Π(J)-orbits; compare the integral kernel entries exactly
    let qclass = residue_classes(&reps.iter().map(|&i| md.qdim[i].clone()).collect::<Vec<_>>());
    let tclass = residue_classes(&reps.iter().map(|&i| md.normsq2n[i].clone()).collect::<Vec<_>>());
    let same_s = |a: usize, b: usize, c: usize, d: usize| md.kernel.entry(reps[a], reps[b]) == md.kernel.entry(reps[c], reps[d]);

    let mut perms = Vec::new();
    let mut assign = vec![usize::MAX; k];
    let mut used = vec![false; k];
    // the vacuum orbit is first and must stay put
    assign[0] = 0;
    used[0] = true;
    fn go(
        a: usize,
        k: usize,
        assign: &mut Vec<usize>,
        used: &mut Vec<bool>,
        ok: &dyn Fn(usize, usize, &[usize]) -> bool,
        out: &mut Vec<Vec<usize>>,
    ) {
        if a == k {
            out.push(assign.clone());
            return;
        }
        for b in 0..k {
            if used[b] || !ok(a, b, assign) {
                continue;
            }
            assign[a] = b;
            used[b] = true;
            go(a + 1, k, assign, used, ok, out);
            used[b] = false;
            assign[a] = usize::MAX;
        }
    }
    let ok = |a: usize, b: usize, assign: &[usize]| {
        qclass[a] == qclass[b]
            && tclass[a] == tclass[b]
            && same_s(a, a, b, b)
            && (0..a).all(|c| same_s(a, c, b, assign[c]))
    };
    go(1, k, &mut assign, &mut used, &ok, &mut perms);

    let mut invariants = Vec::new();
    for p in &perms {
        let mut m = InvariantMatrix::zeros(alg, format!("π{p:?}"));
        for (a, orb) in orbs.iter().enumerate() {
            for &x in orb {
                for &y in &orbs[p[a]] {
                    m.entries[x][y] = 1;
                }
            }
        }
        if verify_physical(&m, md)?.is_physical() {
            invariants.push(m);
        }
    }
    Ok(Ade7Result {
        permutations: perms,
        invariants,
    })
}
